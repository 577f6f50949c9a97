#include "tame/huber.hpp"

#include <algorithm>

#include "tame/errors.hpp"
#include "tame/polyfactor.hpp"

namespace tame {

HuberPairDesc HuberPairDesc::field_with_places(const FqRef& F, std::vector<PlaceRef> S) {
    if (S.empty()) fail("UnsupportedDescriptor", "place set must be non-empty");
    for (const auto& p : S) {
        if (!p) fail("UnsupportedDescriptor", "null place");
        if (p->kind() != PlaceKind::Finite && p->kind() != PlaceKind::Infinite)
            fail("UnsupportedDescriptor", "place sets admit finite and infinite places only");
        if (!p->field()->same_field(*F)) fail("UnsupportedDescriptor", "place over a different field");
    }
    HuberPairDesc d(F);
    d.ring = RingKind::Field;
    d.plus = PlusKind::PlaceSet;
    d.places = std::move(S);
    return d;
}

HuberPairDesc HuberPairDesc::with_closure(const FqRef& F, RingKind ring, Poly loc_f,
                                          std::vector<RatFunc> generators) {
    HuberPairDesc d(F);
    d.ring = ring;
    d.loc_f = std::move(loc_f);
    d.plus = PlusKind::IntegralClosureOfImage;
    d.generators = std::move(generators);
    if (ring == RingKind::LaurentLoc) {
        if (d.loc_f.is_zero() || d.loc_f.deg() < 1)
            fail("UnsupportedDescriptor", "Laurent localization needs a non-constant element");
    } else {
        d.loc_f = Poly(F);
    }
    return d;
}

namespace {

/* Membership of f in the coordinate ring A itself. */
bool in_ring(const RatFunc& f, const HuberPairDesc& pair) {
    switch (pair.ring) {
        case RingKind::Field:
            return true;
        case RingKind::Poly:
            return f.is_poly();
        case RingKind::LaurentLoc: {
            if (f.is_poly()) return true;
            for (const auto& [pi, e] : factor_poly(f.den())) {
                (void)e;
                if (!(pair.loc_f % pi).is_zero()) return false;
            }
            return true;
        }
    }
    return false;
}

/* Poles of f as rank-1 places, infinity included. */
std::vector<PlaceRef> poles(const RatFunc& f) {
    std::vector<PlaceRef> out;
    for (const auto& [pi, e] : factor_poly(f.den())) {
        (void)e;
        if (f.num().ord_at(pi) < f.den().ord_at(pi)) out.push_back(PlaceValuation::finite(pi));
    }
    if (f.num().deg() > f.den().deg()) out.push_back(PlaceValuation::infinite(f.field()));
    return out;
}

bool regular_at_all_generators(const PlaceRef& w, const std::vector<RatFunc>& gens) {
    for (const auto& g : gens)
        if (!mult_le_one(valuation_at(g, *w))) return false;
    return true;
}

bool contains_place(const std::vector<PlaceRef>& S, const PlaceRef& w) {
    return std::any_of(S.begin(), S.end(), [&](const PlaceRef& p) { return *p == *w; });
}

}  // namespace

bool in_plus(const RatFunc& f, const HuberPairDesc& pair) {
    if (!f.field()->same_field(*pair.F)) fail("UnsupportedDescriptor", "element over a different field");
    if (!in_ring(f, pair)) fail("UnsupportedDescriptor", "element outside the declared ring");
    if (pair.plus == PlusKind::PlaceSet) {
        for (const auto& p : pair.places)
            if (!mult_le_one(valuation_at(f, *p))) return false;
        return true;
    }
    /* Integral closure of F_q[generators]: by Krull, the intersection of all
       O_w with every generator regular at w, so f fails exactly at a pole of
       f where all generators are regular. */
    if (f.is_zero()) return true;
    for (const auto& w : poles(f))
        if (regular_at_all_generators(w, pair.generators)) return false;
    return true;
}

RationalSubset rational_subset(const HuberPairDesc& pair, const RatFunc& f) {
    if (pair.plus != PlusKind::PlaceSet) fail("UnsupportedDescriptor", "rational subsets need a place-set pair");
    if (f.is_zero()) fail("UnsupportedDescriptor", "rational subset parameter must be non-zero");
    auto filtered = [&](int sign) {
        HuberPairDesc d = pair;
        d.places.clear();
        for (const auto& p : pair.places) {
            Value v = valuation_at(f, *p);
            auto c = cmp(v, Value::one(v.rank()));
            bool keep = sign > 0   ? c != std::strong_ordering::less
                        : sign < 0 ? c != std::strong_ordering::greater
                                   : c == std::strong_ordering::equal;
            if (keep) d.places.push_back(p);
        }
        return d;
    };
    return RationalSubset{filtered(1), filtered(-1), filtered(0)};
}

PointClass classify_point(const PlaceRef& v, const HuberPairDesc& pair) {
    if (!v) fail("UnsupportedDescriptor", "null place");
    if (!v->field()->same_field(*pair.F)) fail("UnsupportedDescriptor", "point over a different field");
    PointClass out(pair.F);
    switch (v->kind()) {
        case PlaceKind::Finite: out.type = "classical"; break;
        case PlaceKind::Infinite: out.type = "at-infinity"; break;
        case PlaceKind::Gauss: out.type = "Gauss"; break;
        case PlaceKind::Trivial: out.type = "trivial"; break;
        case PlaceKind::Composite: out.type = "rank-2"; break;
    }
    if (pair.plus == PlusKind::IntegralClosureOfImage) {
        for (const auto& g : pair.generators) {
            if (!mult_le_one(valuation_at(g, *v))) {
                out.member = false;
                out.has_witness = true;
                out.witness = g;
                return out;
            }
        }
        out.member = true;
        return out;
    }
    for (const auto& w : rank1_constituents(v)) {
        if (contains_place(pair.places, w)) continue;
        out.member = false;
        out.has_witness = true;
        out.witness = w->kind() == PlaceKind::Finite
                          ? RatFunc(Poly::constant(pair.F, 1), w->pi())
                          : RatFunc(Poly::t(pair.F));
        return out;
    }
    out.member = true;
    return out;
}

}  // namespace tame
