#include "tame/kummer.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tame/errors.hpp"
#include "tame/grammar.hpp"

namespace tame {

namespace {

constexpr int kLevelCap = 4;
constexpr long long kCosetCap = 4096;
constexpr long long kMatrixCap = 64;

Rat place_value(const RatFunc& f, const PlaceRef& v) {
    Value val = valuation_at(f, *v);
    if (val.is_zero()) fail("InternalError", "valuation of zero requested");
    return val.exps()[0];
}

}  // namespace

KummerAlgebra::KummerAlgebra(FqRef F, PlaceRef base, std::vector<long long> m,
                             std::vector<RatFunc> alpha)
    : F_(std::move(F)), base_(std::move(base)), m_(std::move(m)), alpha_(std::move(alpha)) {}

KummerRef KummerAlgebra::make(FqRef F, PlaceRef base, std::vector<long long> m,
                              std::vector<RatFunc> alpha) {
    if (!F) fail("UnsupportedDescriptor", "null constant field");
    if (!base) fail("UnsupportedDescriptor", "null base place");
    if (base->kind() == PlaceKind::Composite)
        fail("UnsupportedDescriptor", "base valuation must have rank 1");
    if (!base->field()->same_field(*F))
        fail("UnsupportedDescriptor", "base place over a different field");
    if (m.empty() || m.size() != alpha.size())
        fail("UnsupportedDescriptor", "need matching non-empty exponent and unit lists");
    if (m.size() > 4) fail("UnsupportedDescriptor", "at most 4 Kummer generators");
    long long p = F->p();
    for (long long mi : m) {
        if (mi < 1) fail("UnsupportedDescriptor", "exponents must be positive");
        if (std::gcd(mi, p) != 1)
            fail("UnsupportedDescriptor", "exponents must be prime to the characteristic");
    }
    for (const auto& a : alpha) {
        if (a.is_zero()) fail("UnsupportedDescriptor", "units must be non-zero");
        if (!a.field()->same_field(*F)) fail("UnsupportedDescriptor", "unit over a different field");
    }

    auto alg = std::shared_ptr<KummerAlgebra>(
        new KummerAlgebra(std::move(F), std::move(base), std::move(m), std::move(alpha)));
    for (long long mi : alg->m_) alg->lcm_ = std::lcm(alg->lcm_, mi);
    alg->zeta_ = alg->F_->zeta(alg->lcm_);

    for (long long mi : alg->m_) {
        alg->count_ *= mi;
        if (alg->count_ > kCosetCap) fail("UnsupportedDescriptor", "coset table too large");
    }
    for (const auto& a : alg->alpha_) alg->unit_values_.push_back(place_value(a, alg->base_));

    alg->values_.reserve(static_cast<size_t>(alg->count_));
    for (long long label = 0; label < alg->count_; ++label) {
        auto tup = alg->coset_tuple(label);
        Rat v(0);
        for (size_t i = 0; i < tup.size(); ++i)
            v += alg->unit_values_[i] * Rat(tup[i], alg->m_[i]);
        alg->values_.push_back(v);
    }

    GroupLattice base_group;
    base_group.rank = 1;
    switch (alg->base_->kind()) {
        case PlaceKind::Finite:
        case PlaceKind::Infinite:
            base_group.generators = {Value::of(Rat(1))};
            break;
        case PlaceKind::Gauss:
            base_group.generators = {Value::of(alg->base_->gamma())};
            break;
        default:
            break;  // trivial place: trivial value group
    }
    for (long long a = 0; a < alg->count_; ++a)
        for (long long b = a + 1; b < alg->count_; ++b)
            if (in_lattice(Value::of(alg->values_[static_cast<size_t>(a)] -
                                     alg->values_[static_cast<size_t>(b)]),
                           base_group))
                fail("DegeneratePresentation",
                     "coset values collide modulo the base value group");

    alg->lattice_ = base_group;
    for (size_t i = 0; i < alg->m_.size(); ++i)
        alg->lattice_.roots.push_back({Value::of(alg->unit_values_[i]), alg->m_[i]});
    return alg;
}

std::vector<long long> KummerAlgebra::coset_tuple(long long label) const {
    if (label < 0 || label >= count_) fail("IndexOutOfRange", "coset label out of range");
    std::vector<long long> tup(m_.size(), 0);
    for (size_t i = 0; i < m_.size(); ++i) {
        tup[i] = label % m_[i];
        label /= m_[i];
    }
    return tup;
}

long long KummerAlgebra::coset_label(const std::vector<long long>& tuple) const {
    if (tuple.size() != m_.size()) fail("IndexOutOfRange", "coset tuple has wrong length");
    long long label = 0;
    for (size_t i = m_.size(); i-- > 0;) {
        if (tuple[i] < 0 || tuple[i] >= m_[i]) fail("IndexOutOfRange", "coset entry out of range");
        label = label * m_[i] + tuple[i];
    }
    return label;
}

TensorElement::TensorElement(KummerRef alg, int level) : alg_(std::move(alg)), level_(level) {
    if (!alg_) fail("UnsupportedDescriptor", "null algebra");
    if (level_ < 1 || level_ > kLevelCap) fail("UnsupportedDescriptor", "tensor level out of range");
}

TensorElement TensorElement::unit(const KummerRef& alg, int level) {
    TensorElement x(alg, level);
    x.add_term(std::vector<long long>(static_cast<size_t>(level), 0),
               RatFunc::constant(alg->field(), 1));
    return x;
}

TensorElement TensorElement::basis(const KummerRef& alg, int level,
                                   const std::vector<long long>& key) {
    TensorElement x(alg, level);
    x.add_term(key, RatFunc::constant(alg->field(), 1));
    return x;
}

RatFunc TensorElement::coeff(const std::vector<long long>& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? RatFunc(alg_->field()) : it->second;
}

void TensorElement::add_term(const std::vector<long long>& key, const RatFunc& a) {
    if (key.size() != static_cast<size_t>(level_)) fail("IndexOutOfRange", "key has wrong length");
    for (long long label : key)
        if (label < 0 || label >= alg_->coset_count())
            fail("IndexOutOfRange", "coset label out of range");
    if (a.is_zero()) return;
    if (!a.field()->same_field(*alg_->field()))
        fail("UnsupportedDescriptor", "coefficient over a different field");
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, a);
        return;
    }
    it->second = it->second + a;
    if (it->second.is_zero()) coeffs_.erase(it);
}

TensorElement TensorElement::scaled(const RatFunc& c) const {
    TensorElement r(alg_, level_);
    if (c.is_zero()) return r;
    for (const auto& [key, a] : coeffs_) r.coeffs_.emplace(key, a * c);
    return r;
}

TensorElement TensorElement::operator-() const {
    TensorElement r(alg_, level_);
    for (const auto& [key, a] : coeffs_) r.coeffs_.emplace(key, -a);
    return r;
}

namespace {

void require_compatible(const TensorElement& x, const TensorElement& y) {
    if (x.algebra().get() != y.algebra().get())
        fail("UnsupportedDescriptor", "elements of different algebras");
    if (x.level() != y.level()) fail("LevelMismatch", "elements of different levels");
}

}  // namespace

TensorElement operator+(const TensorElement& x, const TensorElement& y) {
    require_compatible(x, y);
    TensorElement r = x;
    for (const auto& [key, a] : y.coeffs()) r.add_term(key, a);
    return r;
}

TensorElement operator-(const TensorElement& x, const TensorElement& y) {
    require_compatible(x, y);
    TensorElement r = x;
    for (const auto& [key, a] : y.coeffs()) r.add_term(key, -a);
    return r;
}

TensorElement multiply(const TensorElement& x, const TensorElement& y) {
    require_compatible(x, y);
    const auto& alg = *x.algebra();
    size_t r = alg.gens();
    TensorElement out(x.algebra(), x.level());
    std::vector<long long> key(static_cast<size_t>(x.level()), 0);
    std::vector<long long> wraps(r, 0);
    for (const auto& [kx, ax] : x.coeffs()) {
        for (const auto& [ky, ay] : y.coeffs()) {
            std::fill(wraps.begin(), wraps.end(), 0);
            for (size_t j = 0; j < kx.size(); ++j) {
                auto tx = alg.coset_tuple(kx[j]);
                auto ty = alg.coset_tuple(ky[j]);
                for (size_t i = 0; i < r; ++i) {
                    long long s = tx[i] + ty[i];
                    if (s >= alg.exponents()[i]) {
                        s -= alg.exponents()[i];
                        ++wraps[i];
                    }
                    tx[i] = s;
                }
                key[j] = alg.coset_label(tx);
            }
            RatFunc c = ax * ay;
            for (size_t i = 0; i < r; ++i)
                if (wraps[i] > 0) c = c * ratfunc_pow(alg.units()[i], wraps[i]);
            out.add_term(key, c);
        }
    }
    return out;
}

TensorElement m_sigma(const TensorElement& x, const std::vector<GaloisElem>& sigmas) {
    const auto& alg = *x.algebra();
    size_t n = static_cast<size_t>(x.level());
    size_t r = alg.gens();
    if (sigmas.size() + 1 != n) fail("LevelMismatch", "need level - 1 twist elements");
    for (const auto& s : sigmas)
        if (s.size() != r) fail("LevelMismatch", "twist element has wrong length");

    TensorElement out(x.algebra(), 1);
    const FqRef& F = alg.field();
    long long L = alg.zeta_order();
    for (const auto& [key, a] : x.coeffs()) {
        long long zexp = 0;
        std::vector<long long> total(r, 0);
        for (size_t j = 0; j < n; ++j) {
            auto tup = alg.coset_tuple(key[j]);
            for (size_t i = 0; i < r; ++i) {
                if (j + 1 < n) {
                    long long s = ((sigmas[j][i] % alg.exponents()[i]) + alg.exponents()[i]) %
                                  alg.exponents()[i];
                    zexp = (zexp + (L / alg.exponents()[i]) * s % L * (tup[i] % L)) % L;
                }
                total[i] += tup[i];
            }
        }
        RatFunc c = a * RatFunc::constant(F, F->pow(alg.zeta(), static_cast<uint64_t>(zexp)));
        std::vector<long long> tup(r, 0);
        for (size_t i = 0; i < r; ++i) {
            tup[i] = total[i] % alg.exponents()[i];
            long long carries = total[i] / alg.exponents()[i];
            if (carries > 0) c = c * ratfunc_pow(alg.units()[i], carries);
        }
        out.add_term({alg.coset_label(tup)}, c);
    }
    return out;
}

Value b_valuation(const TensorElement& x) {
    if (x.level() != 1) fail("LevelMismatch", "valuation needs a level-1 element");
    if (x.is_zero()) return Value::zero();
    const auto& alg = *x.algebra();
    bool first = true;
    Rat best;
    for (const auto& [key, a] : x.coeffs()) {
        Rat v = place_value(a, alg.base()) + alg.coset_value(key[0]);
        if (first || v < best) best = v;
        first = false;
    }
    return Value::of(best);
}

namespace {

/* Calls fn with every (level-1)-tuple of Galois elements. */
template <typename Fn>
void for_each_twist(const KummerAlgebra& alg, int level, Fn&& fn) {
    size_t slots = static_cast<size_t>(level - 1);
    std::vector<long long> counter(slots, 0);
    std::vector<GaloisElem> sigmas(slots);
    while (true) {
        for (size_t j = 0; j < slots; ++j) sigmas[j] = alg.coset_tuple(counter[j]);
        fn(sigmas);
        size_t j = 0;
        for (; j < slots; ++j) {
            if (++counter[j] < alg.coset_count()) break;
            counter[j] = 0;
        }
        if (j == slots) return;
    }
}

}  // namespace

Value sup_value(const TensorElement& x) {
    if (x.is_zero()) fail("UnsupportedDescriptor", "sup of the zero element");
    bool found = false;
    Rat best;
    for_each_twist(*x.algebra(), x.level(), [&](const std::vector<GaloisElem>& sigmas) {
        Value v = b_valuation(m_sigma(x, sigmas));
        if (v.is_zero()) return;
        if (!found || v.exps()[0] < best) best = v.exps()[0];
        found = true;
    });
    if (!found) fail("InternalError", "non-zero element vanished in every twist component");
    return Value::of(best);
}

bool is_integral(const TensorElement& x) {
    const auto& alg = *x.algebra();
    for (const auto& [key, a] : x.coeffs()) {
        Rat v = place_value(a, alg.base());
        for (long long label : key) v += alg.coset_value(label);
        if (v < Rat(0)) return false;
    }
    return true;
}

bool is_integral_oracle(const TensorElement& x) {
    bool ok = true;
    for_each_twist(*x.algebra(), x.level(), [&](const std::vector<GaloisElem>& sigmas) {
        if (!ok) return;
        Value v = b_valuation(m_sigma(x, sigmas));
        if (!v.is_zero() && v.exps()[0] < Rat(0)) ok = false;
    });
    return ok;
}

namespace {

std::vector<std::vector<long long>> enumerate_keys(const KummerAlgebra& alg, int level) {
    std::vector<std::vector<long long>> keys;
    std::vector<long long> key(static_cast<size_t>(level), 0);
    while (true) {
        keys.push_back(key);
        bool done = true;
        for (size_t j = key.size(); j-- > 0;) {
            if (++key[j] < alg.coset_count()) {
                done = false;
                break;
            }
            key[j] = 0;
        }
        if (done) return keys;
    }
}

}  // namespace

std::vector<RatFunc> minimal_polynomial(const TensorElement& x) {
    const auto& alg = *x.algebra();
    const FqRef& F = alg.field();
    long long dim = 1;
    for (int j = 0; j < x.level(); ++j) {
        dim *= alg.coset_count();
        if (dim > kMatrixCap) fail("UnsupportedDescriptor", "coset basis too large for linear algebra");
    }
    size_t N = static_cast<size_t>(dim);

    auto keys = enumerate_keys(alg, x.level());
    std::map<std::vector<long long>, size_t> index;
    for (size_t i = 0; i < N; ++i) index[keys[i]] = i;

    struct Row {
        size_t pivot;
        std::vector<RatFunc> coords;
        std::vector<RatFunc> combo;
    };
    std::vector<Row> rows;

    TensorElement power = TensorElement::unit(x.algebra(), x.level());
    for (size_t k = 0; k <= N; ++k) {
        std::vector<RatFunc> w(N, RatFunc(F));
        for (const auto& [key, a] : power.coeffs()) w[index.at(key)] = a;
        std::vector<RatFunc> combo(k + 1, RatFunc(F));
        combo[k] = RatFunc::constant(F, 1);

        for (const auto& row : rows) {
            if (w[row.pivot].is_zero()) continue;
            RatFunc f = w[row.pivot];
            for (size_t i = 0; i < N; ++i)
                if (!row.coords[i].is_zero()) w[i] = w[i] - f * row.coords[i];
            for (size_t i = 0; i < row.combo.size(); ++i)
                if (!row.combo[i].is_zero()) combo[i] = combo[i] - f * row.combo[i];
        }

        size_t pivot = N;
        for (size_t i = 0; i < N; ++i)
            if (!w[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == N) return combo;

        RatFunc inv = w[pivot].inv();
        for (auto& c : w) c = c * inv;
        for (auto& c : combo) c = c * inv;
        rows.push_back({pivot, std::move(w), std::move(combo)});
        power = multiply(power, x);
    }
    fail("InternalError", "Krylov iteration failed to terminate");
}

Vandermonde vandermonde(const FqRef& F, long long m, int n) {
    if (!F) fail("UnsupportedDescriptor", "null field");
    if (m < 1) fail("UnsupportedDescriptor", "need a positive root order");
    if (n < 1 || n > kLevelCap) fail("UnsupportedDescriptor", "level out of range");
    uint64_t zeta = F->zeta(m);

    Vandermonde V;
    V.m = m;
    V.n = n;
    V.size = 1;
    for (int j = 1; j < n; ++j) {
        V.size *= m;
        if (V.size > kCosetCap) fail("UnsupportedDescriptor", "matrix too large");
    }
    size_t N = static_cast<size_t>(V.size);
    uint64_t inv_n = F->inv(F->embed_scalar(V.size % F->p()));

    auto dot = [&](size_t a, size_t b) {
        long long e = 0;
        for (int s = 0; s + 1 < n; ++s) {
            e += (static_cast<long long>(a) % m) * (static_cast<long long>(b) % m);
            a /= static_cast<size_t>(m);
            b /= static_cast<size_t>(m);
        }
        return ((e % m) + m) % m;
    };

    V.V.assign(N, std::vector<uint64_t>(N, 0));
    V.Vinv.assign(N, std::vector<uint64_t>(N, 0));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            long long e = dot(i, j);
            V.V[i][j] = F->pow(zeta, static_cast<uint64_t>(e));
            V.Vinv[i][j] = F->mul(inv_n, F->pow(zeta, static_cast<uint64_t>((m - e) % m)));
        }
    return V;
}

RatFunc phi(const TensorElement& x) {
    return x.coeff(std::vector<long long>(static_cast<size_t>(x.level()), 0));
}

TensorElement homotopy_D(int i, const TensorElement& x) {
    if (i < 1 || i > x.level()) fail("IndexOutOfRange", "homotopy slot out of range");
    TensorElement out(x.algebra(), x.level());
    for (const auto& [key, a] : x.coeffs()) {
        bool keep = true;
        for (int j = 0; j + 1 < i; ++j)
            if (key[static_cast<size_t>(j)] != 0) {
                keep = false;
                break;
            }
        if (keep) out.add_term(key, a);
    }
    return out;
}

namespace {

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail("ParseError", "expected an integer, got \"" + s + "\"");
    return std::stoll(s);
}

}  // namespace

KummerRef parse_kummer(const std::string& s, const FqRef& F, const PlaceRef& base) {
    auto halves = split_top(s, ':');
    if (halves.size() != 2) fail("ParseError", "expected \"m=...:alpha=...\"");
    std::string ms = strip(halves[0]);
    std::string as = strip(halves[1]);
    if (ms.rfind("m=", 0) != 0) fail("ParseError", "expected \"m=\" prefix");
    if (as.rfind("alpha=", 0) != 0) fail("ParseError", "expected \"alpha=\" prefix");

    std::vector<long long> m;
    for (const auto& part : split_top(ms.substr(2), ',')) m.push_back(parse_int(strip(part)));
    std::vector<RatFunc> alpha;
    for (const auto& part : split_top(as.substr(6), ','))
        alpha.push_back(parse_ratfunc(strip(part), F));
    return KummerAlgebra::make(F, base, std::move(m), std::move(alpha));
}

std::string kummer_str(const KummerAlgebra& alg) {
    std::string s = "m=";
    for (size_t i = 0; i < alg.exponents().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alg.exponents()[i]);
    }
    s += ":alpha=";
    for (size_t i = 0; i < alg.units().size(); ++i) {
        if (i) s += ",";
        s += ratfunc_str(alg.units()[i]);
    }
    return s;
}

namespace {

std::string slot_str(const KummerAlgebra& alg, long long label) {
    auto tup = alg.coset_tuple(label);
    std::string s;
    for (size_t i = 0; i < tup.size(); ++i) {
        if (tup[i] == 0) continue;
        s += "T" + std::to_string(i + 1);
        if (tup[i] > 1) s += "^" + std::to_string(tup[i]);
    }
    return s.empty() ? "1" : s;
}

long long parse_slot(const std::string& s, const KummerAlgebra& alg) {
    if (s == "1") return 0;
    std::vector<long long> tup(alg.gens(), 0);
    std::vector<bool> seen(alg.gens(), false);
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'T') fail("ParseError", "expected a generator in \"" + s + "\"");
        ++pos;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        long long idx = parse_int(s.substr(start, pos - start));
        if (idx < 1 || idx > static_cast<long long>(alg.gens()))
            fail("ParseError", "generator index out of range in \"" + s + "\"");
        long long e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            e = parse_int(s.substr(start, pos - start));
        }
        size_t i = static_cast<size_t>(idx - 1);
        if (seen[i]) fail("ParseError", "generator repeated in \"" + s + "\"");
        if (e < 1 || e >= alg.exponents()[i])
            fail("ParseError", "exponent out of range in \"" + s + "\"");
        seen[i] = true;
        tup[i] = e;
    }
    return alg.coset_label(tup);
}

std::vector<std::string> split_tensor(const std::string& s) {
    std::vector<std::string> slots;
    size_t pos = 0;
    while (true) {
        size_t at = s.find("(x)", pos);
        if (at == std::string::npos) {
            slots.push_back(s.substr(pos));
            return slots;
        }
        slots.push_back(s.substr(pos, at - pos));
        pos = at + 3;
    }
}

}  // namespace

TensorElement parse_tensor_element(const std::string& s, const KummerRef& alg, int level) {
    TensorElement x(alg, level);
    std::string body = strip(s);
    if (body.empty()) fail("ParseError", "empty element");
    if (body == "0") return x;
    for (const auto& raw : split_top(body, '+')) {
        std::string term = strip(raw);
        if (term.empty()) fail("ParseError", "empty term");
        RatFunc coef = RatFunc::constant(alg->field(), 1);
        std::string slots_str = term;
        if (term[0] == '(') {
            int depth = 0;
            size_t close = std::string::npos;
            for (size_t i = 0; i < term.size(); ++i) {
                if (term[i] == '(') ++depth;
                if (term[i] == ')' && --depth == 0) {
                    close = i;
                    break;
                }
            }
            if (close == std::string::npos) fail("ParseError", "unbalanced parentheses");
            std::string rest = strip(term.substr(close + 1));
            if (!rest.empty() && rest[0] == '*') {
                coef = parse_ratfunc(term.substr(1, close - 1), alg->field());
                slots_str = strip(rest.substr(1));
            } else if (rest.empty()) {
                coef = parse_ratfunc(term, alg->field());
                slots_str.clear();
            }
        } else if (size_t star = term.find('*'); star != std::string::npos) {
            coef = parse_ratfunc(strip(term.substr(0, star)), alg->field());
            slots_str = strip(term.substr(star + 1));
        } else if (term.find('T') == std::string::npos && term.find("(x)") == std::string::npos) {
            coef = parse_ratfunc(term, alg->field());
            slots_str.clear();
        }

        std::vector<long long> key;
        if (slots_str.empty()) {
            key.assign(static_cast<size_t>(level), 0);
        } else {
            std::string compact;
            for (char c : slots_str)
                if (c != ' ' && c != '\t') compact.push_back(c);
            auto slots = split_tensor(compact);
            if (slots.size() != static_cast<size_t>(level))
                fail("ParseError", "expected " + std::to_string(level) + " tensor slots");
            for (const auto& slot : slots) key.push_back(parse_slot(slot, *alg));
        }
        x.add_term(key, coef);
    }
    return x;
}

std::string tensor_element_str(const TensorElement& x) {
    if (x.is_zero()) return "0";
    const auto& alg = *x.algebra();
    std::string out;
    bool first = true;
    for (const auto& [key, a] : x.coeffs()) {
        if (!first) out += " + ";
        first = false;
        std::string coef = ratfunc_str(a);
        std::string slots;
        for (size_t j = 0; j < key.size(); ++j) {
            if (j) slots += "(x)";
            slots += slot_str(alg, key[j]);
        }
        if (coef == "1") {
            out += slots;
        } else {
            bool wrap = coef.find(' ') != std::string::npos || coef.find('*') != std::string::npos;
            out += (wrap ? "(" + coef + ")" : coef) + " * " + slots;
        }
    }
    return out;
}

}  // namespace tame
