#include "tame/grammar.hpp"

#include <cctype>
#include <optional>

#include "tame/errors.hpp"
#include "tame/polyfactor.hpp"

namespace tame {

namespace {

std::string coef_str(const FqRef& F, uint64_t c) {
    std::string s = F->elem_str(c);
    if (s.find('+') != std::string::npos) return "(" + s + ")";
    return s;
}

struct Lexer {
    const std::string& s;
    size_t i = 0;

    explicit Lexer(const std::string& in) : s(in) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail("ParseError", std::string("expected '") + c + "' in \"" + s + "\"");
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(i, w.size(), w) != 0) return false;
        size_t j = i + w.size();
        if (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) return false;
        i = j;
        return true;
    }
    long long integer() {
        skip_ws();
        size_t j = i;
        if (j < s.size() && s[j] == '-') ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) fail("ParseError", "expected an integer in \"" + s + "\"");
        long long v = 0;
        try {
            v = std::stoll(s.substr(i, k - i));
        } catch (const std::exception&) {
            fail("ParseError", "integer out of range in \"" + s + "\"");
        }
        i = k;
        return v;
    }
    void end() {
        skip_ws();
        if (i != s.size()) fail("ParseError", "trailing input in \"" + s + "\"");
    }
};

uint64_t scalar_expr(Lexer& lx, const FqRef& F);

RatFunc rat_expr(Lexer& lx, const FqRef& F);

RatFunc rat_atom(Lexer& lx, const FqRef& F) {
    char c = lx.peek();
    if (c == '(') {
        lx.expect('(');
        RatFunc v = rat_expr(lx, F);
        lx.expect(')');
        return v;
    }
    if (c == '[') {
        if (!F->base()) fail("ParseError", "digit brackets need an extension field");
        lx.expect('[');
        std::vector<uint64_t> digits;
        if (lx.peek() != ']') {
            digits.push_back(scalar_expr(lx, F->base()));
            while (lx.eat(',')) digits.push_back(scalar_expr(lx, F->base()));
        }
        lx.expect(']');
        if (static_cast<int>(digits.size()) > F->deg_over_base())
            fail("ParseError", "too many digits for the field");
        digits.resize(static_cast<size_t>(F->deg_over_base()), 0);
        return RatFunc::constant(F, F->from_digits(digits));
    }
    if (c == 't') {
        ++lx.i;
        return RatFunc::t(F);
    }
    if (c == 'u') {
        ++lx.i;
        if (!F->base()) fail("ParseError", "'u' needs an extension field");
        std::vector<uint64_t> d(static_cast<size_t>(F->deg_over_base()), 0);
        if (d.size() < 2) fail("ParseError", "'u' needs an extension field");
        d[1] = 1;
        return RatFunc::constant(F, F->from_digits(d));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long long n = lx.integer();
        long long p = F->p();
        return RatFunc::constant(F, F->embed_scalar(((n % p) + p) % p));
    }
    fail("ParseError", "unexpected character in \"" + lx.s + "\"");
}

RatFunc rat_power(Lexer& lx, const FqRef& F) {
    RatFunc base = rat_atom(lx, F);
    if (lx.eat('^')) return ratfunc_pow(base, lx.integer());
    return base;
}

RatFunc rat_unary(Lexer& lx, const FqRef& F) {
    if (lx.eat('-')) return -rat_unary(lx, F);
    return rat_power(lx, F);
}

RatFunc rat_term(Lexer& lx, const FqRef& F) {
    RatFunc v = rat_unary(lx, F);
    while (true) {
        if (lx.eat('*'))
            v = v * rat_unary(lx, F);
        else if (lx.eat('/'))
            v = v / rat_unary(lx, F);
        else
            return v;
    }
}

RatFunc rat_expr(Lexer& lx, const FqRef& F) {
    RatFunc v = rat_term(lx, F);
    while (true) {
        if (lx.eat('+'))
            v = v + rat_term(lx, F);
        else if (lx.peek() == '-') {
            lx.expect('-');
            v = v - rat_term(lx, F);
        } else {
            return v;
        }
    }
}

uint64_t scalar_expr(Lexer& lx, const FqRef& F) {
    RatFunc v = rat_expr(lx, F);
    if (!v.is_poly() || v.num().deg() > 0) fail("ParseError", "expected a field element");
    return v.num().coef(0);
}

Rat rat_number(Lexer& lx) {
    long long n = lx.integer();
    if (lx.eat('/')) return Rat(n, lx.integer());
    return Rat(n);
}

PlaceRef place_expr(Lexer& lx, const FqRef& F) {
    PlaceRef head;
    if (lx.eat_word("inf")) {
        head = PlaceValuation::infinite(F);
    } else if (lx.eat_word("trivial")) {
        head = PlaceValuation::trivial(F);
    } else if (lx.eat_word("gauss")) {
        lx.expect('(');
        Rat g = rat_number(lx);
        lx.expect(')');
        head = PlaceValuation::gauss(F, g);
    } else {
        RatFunc f = rat_expr(lx, F);
        if (!f.is_poly()) fail("ParseError", "finite place must be a polynomial");
        head = PlaceValuation::finite(f.num().monic());
    }
    if (lx.eat(';')) return PlaceValuation::composite(head, place_expr(lx, F));
    return head;
}

FqRef field_expr(Lexer& lx) {
    if (!lx.eat_word("GF")) fail("ParseError", "expected GF(q)");
    lx.expect('(');
    long long q = lx.integer();
    lx.expect(')');
    if (q < 2) fail("ParseError", "field size must be at least 2");
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int k = 0;
    long long m = q;
    while (m > 1) {
        if (m % p != 0) fail("ParseError", "field size must be a prime power");
        m /= p;
        ++k;
    }
    return Fq::make(p, k);
}

}  // namespace

std::string field_str(const FqRef& F) { return "GF(" + std::to_string(F->q()) + ")"; }

std::string poly_str(const Poly& f) {
    if (f.is_zero()) return "0";
    const FqRef& F = f.field();
    std::string out;
    for (int k = f.deg(); k >= 0; --k) {
        uint64_t c = f.coef(k);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += coef_str(F, c);
        } else {
            if (c != 1) out += coef_str(F, c) + "*";
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

std::string ratfunc_str(const RatFunc& f) {
    if (f.is_poly()) return poly_str(f.num());
    std::string n = poly_str(f.num());
    std::string d = poly_str(f.den());
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    if (d.find(' ') != std::string::npos || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

std::string place_str(const PlaceValuation& v) {
    switch (v.kind()) {
        case PlaceKind::Finite: return poly_str(v.pi());
        case PlaceKind::Infinite: return "inf";
        case PlaceKind::Gauss: return "gauss(" + rat_str(v.gamma()) + ")";
        case PlaceKind::Trivial: return "trivial";
        case PlaceKind::Composite: return place_str(*v.first()) + ";" + place_str(*v.second());
    }
    fail("InternalError", "unknown place kind");
}

std::string pair_str(const HuberPairDesc& pair) {
    std::string out = "pair(";
    switch (pair.ring) {
        case RingKind::Field: out += "field=" + field_str(pair.F) + "(t)"; break;
        case RingKind::Poly: out += "ring=" + field_str(pair.F) + "[t]"; break;
        case RingKind::LaurentLoc: {
            std::string f = poly_str(pair.loc_f);
            if (f.find(' ') != std::string::npos || f.find('*') != std::string::npos) f = "(" + f + ")";
            out += "ring=" + field_str(pair.F) + "[t,1/" + f + "]";
            break;
        }
    }
    out += ", ";
    if (pair.plus == PlusKind::PlaceSet) {
        out += "places=[";
        for (size_t i = 0; i < pair.places.size(); ++i) {
            if (i) out += ",";
            out += place_str(*pair.places[i]);
        }
        out += "]";
    } else if (pair.generators.empty()) {
        out += "plus=const";
    } else {
        out += "plus=closure[";
        for (size_t i = 0; i < pair.generators.size(); ++i) {
            if (i) out += ",";
            out += ratfunc_str(pair.generators[i]);
        }
        out += "]";
    }
    return out + ")";
}

FqRef parse_field(const std::string& s) {
    Lexer lx(s);
    FqRef F = field_expr(lx);
    lx.end();
    return F;
}

Poly parse_poly(const std::string& s, const FqRef& F) {
    Lexer lx(s);
    RatFunc f = rat_expr(lx, F);
    lx.end();
    if (!f.is_poly()) fail("ParseError", "expected a polynomial, got a proper quotient");
    return f.num();
}

RatFunc parse_ratfunc(const std::string& s, const FqRef& F) {
    Lexer lx(s);
    RatFunc f = rat_expr(lx, F);
    lx.end();
    return f;
}

PlaceRef parse_place(const std::string& s, const FqRef& F) {
    Lexer lx(s);
    PlaceRef v = place_expr(lx, F);
    lx.end();
    return v;
}

Value parse_value(const std::string& s) {
    Lexer lx(s);
    if (!lx.eat_word("v")) fail("ParseError", "expected v=...");
    lx.expect('=');
    if (lx.peek() == '0') {
        lx.expect('0');
        lx.end();
        return Value::zero();
    }
    lx.expect('(');
    std::vector<Rat> exps;
    exps.push_back(rat_number(lx));
    while (lx.eat(',')) exps.push_back(rat_number(lx));
    lx.expect(')');
    lx.end();
    return Value(std::move(exps));
}

HuberPairDesc parse_pair(const std::string& s) {
    Lexer lx(s);
    if (!lx.eat_word("pair")) fail("ParseError", "expected pair(...)");
    lx.expect('(');
    FqRef F;
    RingKind ring = RingKind::Field;
    Poly loc(Fq::prime(2));
    if (lx.eat_word("field")) {
        lx.expect('=');
        F = field_expr(lx);
        lx.expect('(');
        if (lx.peek() != 't') fail("ParseError", "expected (t)");
        ++lx.i;
        lx.expect(')');
        ring = RingKind::Field;
    } else if (lx.eat_word("ring")) {
        lx.expect('=');
        F = field_expr(lx);
        lx.expect('[');
        if (lx.peek() != 't') fail("ParseError", "expected [t]");
        ++lx.i;
        if (lx.eat(',')) {
            lx.expect('1');
            lx.expect('/');
            RatFunc f = rat_power(lx, F);
            if (!f.is_poly()) fail("ParseError", "localization must invert a polynomial");
            loc = f.num();
            ring = RingKind::LaurentLoc;
        } else {
            ring = RingKind::Poly;
        }
        lx.expect(']');
    } else {
        fail("ParseError", "expected field= or ring=");
    }
    lx.expect(',');
    std::optional<HuberPairDesc> d;
    if (lx.eat_word("places")) {
        lx.expect('=');
        lx.expect('[');
        std::vector<PlaceRef> S;
        if (lx.peek() != ']') {
            /* Places are comma-separated; place polynomials contain no commas. */
            S.push_back(place_expr(lx, F));
            while (lx.eat(',')) S.push_back(place_expr(lx, F));
        }
        lx.expect(']');
        if (ring != RingKind::Field) fail("ParseError", "place sets require the field ring");
        d = HuberPairDesc::field_with_places(F, std::move(S));
    } else if (lx.eat_word("plus")) {
        lx.expect('=');
        std::vector<RatFunc> gens;
        if (lx.eat_word("const")) {
        } else if (lx.eat_word("closure")) {
            lx.expect('[');
            if (lx.peek() != ']') {
                gens.push_back(rat_expr(lx, F));
                while (lx.eat(',')) gens.push_back(rat_expr(lx, F));
            }
            lx.expect(']');
        } else {
            fail("ParseError", "expected plus=const or plus=closure[...]");
        }
        d = HuberPairDesc::with_closure(F, ring, ring == RingKind::LaurentLoc ? loc : Poly(F), std::move(gens));
    } else {
        fail("ParseError", "expected places= or plus=");
    }
    lx.expect(')');
    lx.end();
    return *d;
}

}  // namespace tame
