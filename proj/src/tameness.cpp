#include "tame/tameness.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tame/errors.hpp"
#include "tame/polyfactor.hpp"

namespace tame {

ExtensionDesc ExtensionDesc::kummer(long long m, RatFunc alpha) {
    if (m < 1) fail("UnsupportedDescriptor", "Kummer exponent must be positive");
    if (alpha.is_zero()) fail("UnsupportedDescriptor", "Kummer unit must be non-zero");
    if (std::gcd(m, alpha.field()->p()) != 1)
        fail("UnsupportedDescriptor", "Kummer exponent must be prime to the characteristic");
    ExtensionDesc d{ExtKind::Kummer, m, std::move(alpha), {}};
    return d;
}

ExtensionDesc ExtensionDesc::artin_schreier(RatFunc a) {
    ExtensionDesc d{ExtKind::ArtinSchreier, 0, std::move(a), {}};
    return d;
}

ExtensionDesc ExtensionDesc::general(std::vector<RatFunc> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) fail("UnsupportedDescriptor", "extension polynomial must have positive degree");
    if (!(coeffs.back().is_poly() && coeffs.back().num().is_one()))
        fail("UnsupportedDescriptor", "extension polynomial must be monic");
    RatFunc a0 = coeffs.front();
    ExtensionDesc d{ExtKind::General, 0, std::move(a0), std::move(coeffs)};
    return d;
}

std::vector<RatFunc> ExtensionDesc::poly() const {
    const FqRef& F = field();
    switch (kind) {
        case ExtKind::Kummer: {
            std::vector<RatFunc> c(static_cast<size_t>(m) + 1, RatFunc(F));
            c[0] = -alpha;
            c[static_cast<size_t>(m)] = RatFunc::constant(F, 1);
            return c;
        }
        case ExtKind::ArtinSchreier: {
            long long p = F->p();
            std::vector<RatFunc> c(static_cast<size_t>(p) + 1, RatFunc(F));
            c[0] = -alpha;
            c[1] = -RatFunc::constant(F, 1);
            c[static_cast<size_t>(p)] = RatFunc::constant(F, 1);
            return c;
        }
        case ExtKind::General:
            return gen_coeffs;
    }
    fail("InternalError", "unknown extension kind");
}

long long ExtensionDesc::degree() const {
    switch (kind) {
        case ExtKind::Kummer: return m;
        case ExtKind::ArtinSchreier: return field()->p();
        case ExtKind::General: return static_cast<long long>(gen_coeffs.size()) - 1;
    }
    fail("InternalError", "unknown extension kind");
}

const char* ram_class_str(RamClass c) {
    switch (c) {
        case RamClass::Unramified: return "unramified";
        case RamClass::Tame: return "tame";
        case RamClass::Wild: return "wild";
    }
    fail("InternalError", "unknown ramification class");
}

RamClass worse(RamClass a, RamClass b) { return a < b ? b : a; }

RamClass classify_ramification(long long e, long long p, bool residue_separable) {
    if (e < 1 || p < 2) fail("UnsupportedDescriptor", "need e >= 1 and a prime residue characteristic");
    if (!residue_separable) return RamClass::Wild;
    if (e == 1) return RamClass::Unramified;
    if (e % p != 0) return RamClass::Tame;
    return RamClass::Wild;
}

const char* site_str(SiteKind s) {
    switch (s) {
        case SiteKind::Etale: return "etale";
        case SiteKind::StronglyEtale: return "strongly_etale";
        case SiteKind::Tame: return "tame";
    }
    fail("InternalError", "unknown site");
}

SiteKind parse_site(const std::string& s) {
    if (s == "etale") return SiteKind::Etale;
    if (s == "strongly_etale") return SiteKind::StronglyEtale;
    if (s == "tame") return SiteKind::Tame;
    fail("ParseError", "unknown site \"" + s + "\"");
}

namespace {

/* Polynomials in T with exact F_q(t) coefficients, ascending and trimmed. */
using TPoly = std::vector<RatFunc>;

constexpr int kRefineDepth = 64;
constexpr int kResidueCap = 16;

void ttrim(TPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int tdeg(const TPoly& a) { return static_cast<int>(a.size()) - 1; }

TPoly tadd(const TPoly& a, const TPoly& b) {
    const FqRef& F = a.empty() ? b.front().field() : a.front().field();
    TPoly r(std::max(a.size(), b.size()), RatFunc(F));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] + b[i];
    }
    ttrim(r);
    return r;
}

TPoly tscale(const TPoly& a, const RatFunc& c) {
    TPoly r = a;
    for (auto& x : r) x = x * c;
    ttrim(r);
    return r;
}

TPoly tmul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    const FqRef& F = a.front().field();
    TPoly r(a.size() + b.size() - 1, RatFunc(F));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    ttrim(r);
    return r;
}

/* Remainder of a by b, b non-empty. */
TPoly trem(TPoly a, const TPoly& b) {
    ttrim(a);
    RatFunc lead = b.back();
    while (tdeg(a) >= tdeg(b)) {
        RatFunc c = a.back() / lead;
        int shift = tdeg(a) - tdeg(b);
        for (size_t i = 0; i < b.size(); ++i)
            a[static_cast<size_t>(shift) + i] = a[static_cast<size_t>(shift) + i] - c * b[i];
        a.pop_back();
        ttrim(a);
        if (a.empty()) break;
    }
    return a;
}

TPoly tgcd(TPoly a, TPoly b) {
    ttrim(a);
    ttrim(b);
    while (!b.empty()) {
        TPoly r = trem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = tscale(a, a.back().inv());
    return a;
}

TPoly tderivative(const TPoly& a) {
    if (a.size() < 2) return {};
    const FqRef& F = a.front().field();
    TPoly r(a.size() - 1, RatFunc(F));
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = a[i] * RatFunc::constant(F, F->embed_scalar(static_cast<long long>(i % static_cast<size_t>(F->p()))));
    ttrim(r);
    return r;
}

/* P(T + c). */
TPoly tshift(const TPoly& p, const RatFunc& c) {
    const FqRef& F = c.field();
    TPoly r;
    TPoly lin = {c, RatFunc::constant(F, 1)};
    for (size_t i = p.size(); i-- > 0;) {
        r = tmul(r, lin);
        r = tadd(r, TPoly{p[i]});
    }
    ttrim(r);
    return r;
}

int vt(const RatFunc& f) {
    const Poly t = Poly::t(f.field());
    return f.num().ord_at(t) - f.den().ord_at(t);
}

/* Image of f in the residue field at t = 0; requires vt(f) >= 0. */
uint64_t residue0(const RatFunc& f) {
    if (f.is_zero()) return 0;
    const FqRef& F = f.field();
    const Poly t = Poly::t(F);
    int a = f.num().ord_at(t), b = f.den().ord_at(t);
    if (a > b) return 0;
    if (a < b) fail("InternalError", "residue of a non-integral element");
    Poly num = f.num();
    Poly den = f.den();
    for (int i = 0; i < a; ++i) {
        num = num / t;
        den = den / t;
    }
    return F->mul(num.eval(0), F->inv(den.eval(0)));
}

Poly lift_poly(const Poly& f, const FqRef& E) {
    return Poly(E, f.coeffs());
}

RatFunc lift_ratfunc(const RatFunc& f, const FqRef& E) {
    return RatFunc(lift_poly(f.num(), E), lift_poly(f.den(), E));
}

TPoly lift_tpoly(const TPoly& p, const FqRef& E) {
    TPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.push_back(lift_ratfunc(c, E));
    return r;
}

struct Segment {
    Rat lambda;  // valuation of the attached roots
    int i1 = 0, i2 = 0;
    long long v1 = 0;  // t-adic valuation at i1
};

/* Lower convex hull of {(i, vt(a_i))}; segments ordered by decreasing lambda. */
std::vector<Segment> newton_segments(const TPoly& p) {
    std::vector<std::pair<int, long long>> pts;
    for (int i = 0; i <= tdeg(p); ++i)
        if (!p[static_cast<size_t>(i)].is_zero()) pts.emplace_back(i, vt(p[static_cast<size_t>(i)]));
    std::vector<std::pair<int, long long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            /* Drop b if it lies on or above segment a..pt. */
            __int128 lhs = static_cast<__int128>(b.second - a.second) * (pt.first - a.first);
            __int128 rhs = static_cast<__int128>(pt.second - a.second) * (b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<Segment> segs;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        Segment s;
        s.i1 = hull[k].first;
        s.i2 = hull[k + 1].first;
        s.v1 = hull[k].second;
        s.lambda = Rat(hull[k].second - hull[k + 1].second, s.i2 - s.i1);
        segs.push_back(s);
    }
    return segs;
}

/* Residual polynomial of the segment over the constant field. */
Poly residual_poly(const TPoly& p, const Segment& seg) {
    const FqRef& F = p.front().field();
    long long e = seg.lambda.denominator();
    long long h = seg.lambda.numerator();
    int len = seg.i2 - seg.i1;
    std::vector<uint64_t> coeffs(static_cast<size_t>(len / e) + 1, 0);
    const Poly t = Poly::t(F);
    for (long long j = 0; j * e <= len; ++j) {
        const RatFunc& a = p[static_cast<size_t>(seg.i1 + j * e)];
        if (a.is_zero()) continue;
        /* Line value at i1 + j*e is v1 - j*h. */
        long long shift = j * h - seg.v1;
        RatFunc scaled = shift >= 0 ? a * RatFunc(poly_pow(t, shift))
                                    : a / RatFunc(poly_pow(t, -shift));
        coeffs[static_cast<size_t>(j)] = residue0(scaled);
    }
    return Poly(F, std::move(coeffs));
}

std::vector<Branch> analyze(TPoly p, std::optional<Rat> from, std::optional<Rat> top,
                            int depth, int base_total_degree);

/* Branches of the root cluster picked by (segment, residual root gamma). */
std::vector<Branch> refine(const TPoly& p, const Segment& seg, const Poly& rfac,
                           std::optional<Rat> top, int depth, int base_total_degree) {
    const FqRef& F = p.front().field();
    long long d = rfac.deg();
    FqRef E = F;
    TPoly q = p;
    Poly r = rfac;
    if (d > 1) {
        if ((F->degree() * d) / base_total_degree > kResidueCap)
            fail("UnsupportedDescriptor", "residue degree cap exceeded");
        E = Fq::extension(F, static_cast<int>(d));
        q = lift_tpoly(p, E);
        r = lift_poly(rfac, E);
    }
    auto roots = poly_roots(r);
    if (roots.empty()) fail("InternalError", "residual factor lost its roots after extension");
    uint64_t gamma = roots.front();
    const Poly t = Poly::t(E);
    long long h = seg.lambda.numerator();
    RatFunc step = h >= 0 ? RatFunc(Poly::monomial(E, gamma, static_cast<int>(h)))
                          : RatFunc(Poly::constant(E, gamma), poly_pow(t, -h));
    std::vector<Branch> out = analyze(tshift(q, step), seg.lambda, top, depth + 1, base_total_degree);
    for (auto& b : out) b.f *= d;
    return out;
}

std::vector<Branch> analyze(TPoly p, std::optional<Rat> from, std::optional<Rat> top,
                            int depth, int base_total_degree) {
    if (depth > kRefineDepth)
        fail("PrecisionExhausted", "refinement depth exceeded; roots failed to separate");
    ttrim(p);
    std::vector<Branch> out;
    const FqRef& F = p.front().field();
    const long long pr = F->p();
    /* Exact T-roots: valuation +infinity, always inside the cluster. */
    size_t k = 0;
    while (k < p.size() && p[k].is_zero()) ++k;
    if (k > 0) {
        p.erase(p.begin(), p.begin() + static_cast<long>(k));
        for (size_t j = 0; j < k; ++j) {
            Branch b;
            b.e = 1;
            b.f = 1;
            b.slope = top ? *top : Rat(0);
            b.cls = RamClass::Unramified;
            out.push_back(b);
        }
    }
    for (const auto& seg : newton_segments(p)) {
        if (from && !(seg.lambda > *from)) continue;
        long long e = seg.lambda.denominator();
        Rat reported = top ? *top : seg.lambda;
        Poly R = residual_poly(p, seg);
        for (const auto& [rfac, mu] : factor_poly(R)) {
            if (mu == 1) {
                Branch b;
                b.e = e;
                b.f = rfac.deg();
                b.slope = reported;
                b.cls = classify_ramification(b.e, pr, true);
                out.push_back(b);
                continue;
            }
            if (e > 1)
                fail("RefinementUnsupported",
                     "repeated residual root on a fractional slope; ramified refinement not supported");
            auto sub = refine(p, seg, rfac, top ? top : std::optional<Rat>(seg.lambda), depth,
                              base_total_degree);
            for (auto& b : sub) out.push_back(b);
        }
    }
    return out;
}

/* p(1/t) rewritten as an exact rational function. */
RatFunc at_infinity(const RatFunc& f) {
    const FqRef& F = f.field();
    auto rev = [&](const Poly& p) {
        std::vector<uint64_t> c(p.coeffs().rbegin(), p.coeffs().rend());
        return Poly(F, std::move(c));
    };
    const Poly t = Poly::t(F);
    Poly num = rev(f.num());
    Poly den = rev(f.den());
    int shift = f.den().deg() - f.num().deg();
    if (shift >= 0) return RatFunc(num * poly_pow(t, shift), den);
    return RatFunc(num, den * poly_pow(t, -shift));
}

}  // namespace

RamificationReport extend_valuation(const PlaceRef& base, const ExtensionDesc& ext) {
    if (!base) fail("UnsupportedDescriptor", "null base place");
    if (base->kind() != PlaceKind::Finite && base->kind() != PlaceKind::Infinite)
        fail("UnsupportedDescriptor", "extend_valuation needs a finite or infinite place");
    const FqRef& F = ext.field();
    if (!base->field()->same_field(*F)) fail("UnsupportedDescriptor", "place over a different field");

    TPoly P = ext.poly();
    ttrim(P);
    TPoly g = tgcd(P, tderivative(P));
    if (tdeg(g) > 0) fail("InseparableExtension", "defining polynomial has repeated roots");

    /* Normalize the place to the t-adic valuation, extending constants so the
       chosen center is rational. */
    FqRef E = F;
    if (base->kind() == PlaceKind::Infinite) {
        for (auto& c : P) c = at_infinity(c);
    } else {
        const Poly& pi = base->pi();
        int d = pi.deg();
        if (d > kResidueCap) fail("UnsupportedDescriptor", "place degree cap exceeded");
        uint64_t theta = 0;
        if (d > 1) {
            E = Fq::extension(F, d);
            P = lift_tpoly(P, E);
            auto roots = poly_roots(lift_poly(pi, E));
            if (roots.empty()) fail("InternalError", "place polynomial has no root in its residue field");
            theta = roots.front();
        } else {
            theta = E->neg(pi.coef(0));
        }
        if (theta != 0)
            for (auto& c : P) c = RatFunc(c.num().shifted(theta), c.den().shifted(theta));
    }

    RamificationReport rep;
    rep.degree = ext.degree();
    rep.branches = analyze(P, std::nullopt, std::nullopt, 0, E->degree());
    long long total = 0;
    for (auto& b : rep.branches) {
        total += b.e * b.f;
        rep.overall = worse(rep.overall, b.cls);
    }
    if (total != rep.degree)
        fail("InternalError", "branch degrees do not sum to the extension degree");
    std::sort(rep.branches.begin(), rep.branches.end(), [](const Branch& a, const Branch& b) {
        if (a.slope != b.slope) return b.slope < a.slope;
        if (a.e != b.e) return a.e > b.e;
        return a.f > b.f;
    });
    return rep;
}

CoverReport cover_admissible(const ExtensionDesc& ext, SiteKind site, const HuberPairDesc& pair,
                             const std::vector<PlaceRef>& boundary) {
    if (!pair.F->same_field(*ext.field()))
        fail("UnsupportedDescriptor", "extension and pair over different fields");
    CoverReport rep;
    for (const auto& v : boundary) {
        if (!v) fail("UnsupportedDescriptor", "null boundary place");
        CoverVerdict verdict;
        verdict.place = v;
        for (const auto& w : rank1_constituents(v)) {
            RamificationReport r = extend_valuation(w, ext);
            verdict.worst = worse(verdict.worst, r.overall);
        }
        switch (site) {
            case SiteKind::Etale: verdict.admissible = true; break;
            case SiteKind::StronglyEtale: verdict.admissible = verdict.worst == RamClass::Unramified; break;
            case SiteKind::Tame: verdict.admissible = verdict.worst != RamClass::Wild; break;
        }
        rep.admissible = rep.admissible && verdict.admissible;
        rep.verdicts.push_back(std::move(verdict));
    }
    return rep;
}

}  // namespace tame
