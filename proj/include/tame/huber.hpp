#pragma once

#include <string>
#include <vector>

#include "tame/places.hpp"
#include "tame/poly.hpp"

namespace tame {

enum class RingKind { Poly, LaurentLoc, Field };
enum class PlusKind { IntegralClosureOfImage, PlaceSet };

/* Pair (A, A+) in the discretely ringed setting.  A is F_q[t], F_q[t,1/f],
   or F_q(t); A+ is either the integral closure of the subring generated by
   `generators` (constants when empty) or the intersection of the valuation
   rings of a finite non-empty place set inside F_q(t).  rational_subset
   outputs may carry an empty place set, which denotes A+ = A. */
struct HuberPairDesc {
    FqRef F;
    RingKind ring = RingKind::Field;
    Poly loc_f;
    PlusKind plus = PlusKind::PlaceSet;
    std::vector<PlaceRef> places;
    std::vector<RatFunc> generators;

    explicit HuberPairDesc(FqRef f) : F(std::move(f)), loc_f(F) {}

    static HuberPairDesc field_with_places(const FqRef& F, std::vector<PlaceRef> S);
    static HuberPairDesc with_closure(const FqRef& F, RingKind ring, Poly loc_f,
                                      std::vector<RatFunc> generators);
};

/* f must lie in pair.ring; decides membership in A+. */
bool in_plus(const RatFunc& f, const HuberPairDesc& pair);

struct RationalSubset {
    HuberPairDesc plus;   // A+[f]
    HuberPairDesc minus;  // A+[1/f]
    HuberPairDesc both;   // A+[f, 1/f]
};

/* Place-set model of the Laurent cover pieces; pair must be a PlaceSet pair
   and f non-zero. */
RationalSubset rational_subset(const HuberPairDesc& pair, const RatFunc& f);

struct PointClass {
    bool member = false;
    std::string type;     // classical / at-infinity / Gauss / rank-2 / trivial
    bool has_witness = false;
    RatFunc witness;      // member of A+ with v(witness) < 0 when not a member

    explicit PointClass(const FqRef& F) : witness(F) {}
};

PointClass classify_point(const PlaceRef& v, const HuberPairDesc& pair);

}  // namespace tame
