#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tame/cech.hpp"

namespace tame {

/* The additive map g -> g^p - g in characteristic p. */
Poly wp(const Poly& g);
uint64_t wp(const FqRef& F, uint64_t a);

/* Class of a polynomial modulo the image of wp.  The representative has no
   monomial exponent >= 1 divisible by p and its constant term lies in a
   fixed transversal of wp(F_q) inside F_q. */
struct WpClass {
    Poly rep;
    uint64_t constant_tag = 0;
};

WpClass wp_reduce(const Poly& f);

/* Section ring of global integral functions: the constants F_q, the
   polynomial ring F_q[t], or the intersection of valuation rings over a set
   of finite places. */
struct SectionRing {
    enum class Kind { Constants, Polynomials, PlaceSet };
    FqRef F;
    Kind kind = Kind::Constants;
    std::vector<PlaceRef> places;

    static SectionRing constants(FqRef F);
    static SectionRing polynomials(FqRef F);
    static SectionRing place_set(FqRef F, std::vector<PlaceRef> places);
};

/* F_p-dimension data for the cokernel of wp on the degree <= N window of a
   section ring.  `dim` comes from exact elimination; `canonical_dim` counts
   canonical forms independently and must agree. */
struct CokerReport {
    long long dim = 0;
    long long canonical_dim = -1;
    long long target_dim = 0;
    long long domain_dim = 0;
    long long rank = 0;
};

/* Both methods run whenever the window equals a full polynomial window; a
   disagreement is a hard OracleMismatch.  N <= 512. */
CokerReport coker_dim(const SectionRing& ring, long long N);

/* Supported adic-spectrum instances: the affine line over the projective
   line, the punctured line and the affine line over the base point, the
   affine line over itself, and place-set pairs inside F_q(t). */
enum class SpaceKind { A1OverP1, GmOverPoint, A1OverPoint, A1OverA1, PlaceSetPair };

struct SpaceDesc {
    FqRef F;
    SpaceKind kind = SpaceKind::A1OverPoint;
    std::vector<PlaceRef> places;  // PlaceSetPair only
};

/* Constant-coefficient cohomology table.  A non-stabilizing degree-one
   cokernel is reported through the truncated dimension sequence with
   h1_finite = false. */
struct CohomologyTable {
    long long h0 = 1;
    std::string h0_desc = "Z/p";
    bool h1_finite = true;
    long long h1 = -1;
    std::vector<std::pair<long long, long long>> h1_truncated;  // (N, dim)
    bool h1_stable = true;
    long long h2 = 0;
    /* Degree-one reference dimension rederived through the structure-sheaf
       route when the instance provides one; -1 otherwise. */
    long long reference_h1 = -1;
    std::string verdict;  // "finite" or "infinite"
};

/* Assembles H^0, H^1, H^2 from the chart-cover sections and the wp
   cokernel.  The degree-one step requires the cover's first Cech cohomology
   of O+ to vanish, which is recomputed, not assumed. */
CohomologyTable tame_cohomology(const SpaceDesc& space,
                                const std::vector<long long>& windows = {8, 16, 32});

struct PurityReport {
    CohomologyTable left;
    CohomologyTable right;
    bool equal = false;
    std::string verdict;
    std::string note;
};

/* Compares degree-one cohomology of two instances over the same field. */
PurityReport purity_check(const SpaceDesc& U, const SpaceDesc& X);

struct HomotopyReportAS {
    long long galois_h0 = 1;
    long long galois_h1 = 0;
    CohomologyTable pipeline;
    bool equal = false;
    std::string verdict;
};

/* Base point versus the affine line over it: the Galois-side dimensions
   against the chart pipeline. */
HomotopyReportAS homotopy_check(const FqRef& F);

}  // namespace tame
