#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "tame/poly.hpp"
#include "tame/value.hpp"

namespace tame {

enum class PlaceKind { Finite, Infinite, Gauss, Composite, Trivial };

class PlaceValuation;
using PlaceRef = std::shared_ptr<const PlaceValuation>;

/* Valuation descriptor on F_q(t).  Finite places carry a monic irreducible
   pi; Gauss carries a rational scale applied to the t-order; Composite
   concatenates a rank-1 place with a residue-level place (the second
   coordinate is live only over a Trivial first component, since residues of
   the rank-1 places are constants). */
class PlaceValuation {
public:
    static PlaceRef finite(Poly pi);
    static PlaceRef infinite(FqRef F);
    static PlaceRef gauss(FqRef F, Rat gamma);
    static PlaceRef composite(PlaceRef first, PlaceRef second);
    static PlaceRef trivial(FqRef F);

    PlaceKind kind() const { return kind_; }
    const FqRef& field() const { return F_; }
    /* Length of the value vector produced by valuation_at. */
    int rank() const;
    const Poly& pi() const;
    const Rat& gamma() const;
    const PlaceRef& first() const;
    const PlaceRef& second() const;
    /* Residue degree over F_q; Finite and Infinite only. */
    int degree() const;

    bool operator==(const PlaceValuation& o) const;

private:
    explicit PlaceValuation(FqRef F) : F_(std::move(F)), pi_(F_) {}

    PlaceKind kind_ = PlaceKind::Trivial;
    FqRef F_;
    Poly pi_;
    Rat gamma_;
    PlaceRef first_, second_;
};

Value valuation_at(const RatFunc& f, const PlaceValuation& v);

struct PartialFractions {
    /* Non-zero components with poles at a single finite place each. */
    std::vector<std::pair<PlaceRef, RatFunc>> parts;
    Poly poly_part;
};

/* Exact decomposition f = poly_part + sum of parts; every pole of f must be
   a Finite member of S. */
PartialFractions partial_fractions(const RatFunc& f, const std::vector<PlaceRef>& S);

/* Rank-1 classical places carrying the valuation with positive weight; empty
   for trivial-like places.  Gauss reduces to the t or infinite place, and a
   composite contributes its live coordinates. */
std::vector<PlaceRef> rank1_constituents(const PlaceRef& v);

}  // namespace tame
