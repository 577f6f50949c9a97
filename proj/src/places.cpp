#include "tame/places.hpp"

#include <algorithm>

#include "tame/errors.hpp"
#include "tame/polyfactor.hpp"

namespace tame {

PlaceRef PlaceValuation::finite(Poly pi) {
    if (pi.deg() < 1 || !pi.is_monic()) fail("UnsupportedDescriptor", "finite place needs a monic non-constant polynomial");
    if (!is_irreducible(pi)) fail("UnsupportedDescriptor", "finite place polynomial is reducible");
    auto v = std::shared_ptr<PlaceValuation>(new PlaceValuation(pi.field()));
    v->kind_ = PlaceKind::Finite;
    v->pi_ = std::move(pi);
    return v;
}

PlaceRef PlaceValuation::infinite(FqRef F) {
    auto v = std::shared_ptr<PlaceValuation>(new PlaceValuation(std::move(F)));
    v->kind_ = PlaceKind::Infinite;
    return v;
}

PlaceRef PlaceValuation::gauss(FqRef F, Rat gamma) {
    auto v = std::shared_ptr<PlaceValuation>(new PlaceValuation(std::move(F)));
    v->kind_ = PlaceKind::Gauss;
    v->gamma_ = gamma;
    return v;
}

PlaceRef PlaceValuation::composite(PlaceRef first, PlaceRef second) {
    if (!first || !second) fail("UnsupportedDescriptor", "composite place needs two constituents");
    if (first->kind_ == PlaceKind::Composite) fail("RankMismatch", "first constituent must have rank 1");
    if (!first->F_->same_field(*second->F_)) fail("UnsupportedDescriptor", "composite constituents over different fields");
    auto v = std::shared_ptr<PlaceValuation>(new PlaceValuation(first->F_));
    v->kind_ = PlaceKind::Composite;
    v->first_ = std::move(first);
    v->second_ = std::move(second);
    if (v->rank() > kMaxRank) fail("RankMismatch", "composite place exceeds the supported rank");
    return v;
}

PlaceRef PlaceValuation::trivial(FqRef F) {
    auto v = std::shared_ptr<PlaceValuation>(new PlaceValuation(std::move(F)));
    v->kind_ = PlaceKind::Trivial;
    return v;
}

int PlaceValuation::rank() const {
    if (kind_ != PlaceKind::Composite) return 1;
    return first_->rank() + second_->rank();
}

const Poly& PlaceValuation::pi() const {
    if (kind_ != PlaceKind::Finite) fail("UnsupportedDescriptor", "place has no finite-place polynomial");
    return pi_;
}

const Rat& PlaceValuation::gamma() const {
    if (kind_ != PlaceKind::Gauss) fail("UnsupportedDescriptor", "place has no Gauss parameter");
    return gamma_;
}

const PlaceRef& PlaceValuation::first() const {
    if (kind_ != PlaceKind::Composite) fail("UnsupportedDescriptor", "place is not composite");
    return first_;
}

const PlaceRef& PlaceValuation::second() const {
    if (kind_ != PlaceKind::Composite) fail("UnsupportedDescriptor", "place is not composite");
    return second_;
}

int PlaceValuation::degree() const {
    if (kind_ == PlaceKind::Finite) return pi_.deg();
    if (kind_ == PlaceKind::Infinite) return 1;
    fail("UnsupportedDescriptor", "residue degree defined for finite and infinite places only");
}

bool PlaceValuation::operator==(const PlaceValuation& o) const {
    if (kind_ != o.kind_ || !F_->same_field(*o.F_)) return false;
    switch (kind_) {
        case PlaceKind::Finite: return pi_ == o.pi_;
        case PlaceKind::Gauss: return gamma_ == o.gamma_;
        case PlaceKind::Composite: return *first_ == *o.first_ && *second_ == *o.second_;
        default: return true;
    }
}

namespace {

/* Rank-1 additive value of a non-zero f. */
Rat rank1_value(const RatFunc& f, const PlaceValuation& v) {
    switch (v.kind()) {
        case PlaceKind::Finite:
            return Rat(f.num().ord_at(v.pi()) - f.den().ord_at(v.pi()));
        case PlaceKind::Infinite:
            return Rat(f.den().deg() - f.num().deg());
        case PlaceKind::Gauss: {
            int ord = f.num().ord_at(Poly::t(f.field())) - f.den().ord_at(Poly::t(f.field()));
            return v.gamma() * Rat(ord);
        }
        case PlaceKind::Trivial:
            return Rat(0);
        default:
            fail("RankMismatch", "rank-1 evaluation on a composite place");
    }
}

void value_vector(const RatFunc& f, const PlaceValuation& v, std::vector<Rat>& out, bool live) {
    if (v.kind() == PlaceKind::Composite) {
        value_vector(f, *v.first(), out, live);
        /* Residues of Finite/Infinite/Gauss places are constants, where every
           place vanishes; only a Trivial first component passes f through. */
        value_vector(f, *v.second(), out, live && v.first()->kind() == PlaceKind::Trivial);
        return;
    }
    out.push_back(live ? rank1_value(f, v) : Rat(0));
}

}  // namespace

Value valuation_at(const RatFunc& f, const PlaceValuation& v) {
    if (f.is_zero()) return Value::zero();
    std::vector<Rat> exps;
    value_vector(f, v, exps, true);
    return Value(std::move(exps));
}

std::vector<PlaceRef> rank1_constituents(const PlaceRef& v) {
    std::vector<PlaceRef> out;
    switch (v->kind()) {
        case PlaceKind::Finite:
        case PlaceKind::Infinite:
            out.push_back(v);
            break;
        case PlaceKind::Gauss:
            if (v->gamma() > Rat(0)) out.push_back(PlaceValuation::finite(Poly::t(v->field())));
            if (v->gamma() < Rat(0)) out.push_back(PlaceValuation::infinite(v->field()));
            break;
        case PlaceKind::Trivial:
            break;
        case PlaceKind::Composite: {
            out = rank1_constituents(v->first());
            if (v->first()->kind() == PlaceKind::Trivial)
                for (auto& w : rank1_constituents(v->second())) out.push_back(std::move(w));
            break;
        }
    }
    return out;
}

PartialFractions partial_fractions(const RatFunc& f, const std::vector<PlaceRef>& S) {
    const FqRef& F = f.field();
    PartialFractions out{{}, Poly(F)};
    auto [q, r] = divrem(f.num(), f.den());
    out.poly_part = q;
    if (r.is_zero()) return out;

    RatFunc resum(out.poly_part);
    for (const auto& [pi, e] : factor_poly(f.den())) {
        PlaceRef at;
        for (const auto& p : S)
            if (p->kind() == PlaceKind::Finite && p->pi() == pi) at = p;
        if (!at) fail("IrreducibleFactorizationFailure", "denominator has a pole outside the declared places");
        Poly pe = poly_pow(pi, e);
        Poly rest = f.den() / pe;
        /* rest is invertible mod pe; extended Euclid through powmod is
           unavailable, so invert by Bezout via gcd steps. */
        Poly r0 = pe, r1 = rest % pe;
        Poly s0 = Poly::constant(F, 0), s1 = Poly::constant(F, 1);
        while (!r1.is_zero()) {
            auto [qq, rr] = divrem(r0, r1);
            Poly s2 = s0 - qq * s1;
            r0 = r1;
            r1 = rr;
            s0 = s1;
            s1 = s2;
        }
        if (r0.deg() != 0) fail("InternalError", "denominator factors are not coprime");
        Poly u = s0.scaled(F->inv(r0.coef(0)));
        Poly a = (r * u) % pe;
        if (a.is_zero()) continue;
        RatFunc comp(a, pe);
        out.parts.emplace_back(at, comp);
        resum = resum + comp;
    }
    if (!(resum == f)) fail("InternalError", "partial fraction components do not re-sum to the input");
    return out;
}

}  // namespace tame
