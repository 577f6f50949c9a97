#pragma once

#include <string>
#include <vector>

#include "tame/huber.hpp"
#include "tame/places.hpp"
#include "tame/poly.hpp"
#include "tame/rational.hpp"

namespace tame {

enum class ExtKind { Kummer, ArtinSchreier, General };

/* Finite separable extension of F_q(t), presented by its defining polynomial
   in T. */
struct ExtensionDesc {
    ExtKind kind;
    long long m = 0;                  // Kummer exponent
    RatFunc alpha;                    // Kummer unit / Artin-Schreier right side
    std::vector<RatFunc> gen_coeffs;  // General kind: ascending T-coefficients, monic

    static ExtensionDesc kummer(long long m, RatFunc alpha);
    static ExtensionDesc artin_schreier(RatFunc a);
    static ExtensionDesc general(std::vector<RatFunc> coeffs);

    const FqRef& field() const { return alpha.field(); }
    /* Defining polynomial, ascending T-coefficients. */
    std::vector<RatFunc> poly() const;
    long long degree() const;
};

enum class RamClass { Unramified, Tame, Wild };

const char* ram_class_str(RamClass c);

/* Worse of the two verdicts. */
RamClass worse(RamClass a, RamClass b);

struct Branch {
    long long e = 1;
    long long f = 1;
    Rat slope;      // valuation of the attached roots; 0 for an exact T-root
    RamClass cls = RamClass::Unramified;
};

struct RamificationReport {
    std::vector<Branch> branches;
    RamClass overall = RamClass::Unramified;
    long long degree = 0;
};

RamClass classify_ramification(long long e, long long p, bool residue_separable);

/* Newton-polygon analysis of ext over the completion at base; base must be a
   Finite or Infinite place.  Residue degrees are relative to the residue
   field of base. */
RamificationReport extend_valuation(const PlaceRef& base, const ExtensionDesc& ext);

enum class SiteKind { Etale, StronglyEtale, Tame };

const char* site_str(SiteKind s);
SiteKind parse_site(const std::string& s);

struct CoverVerdict {
    PlaceRef place;
    RamClass worst = RamClass::Unramified;
    bool admissible = true;
};

struct CoverReport {
    std::vector<CoverVerdict> verdicts;
    bool admissible = true;
};

/* Admissibility of the cover for the chosen site at each boundary valuation;
   higher-rank valuations are decided on their rank-1 constituents. */
CoverReport cover_admissible(const ExtensionDesc& ext, SiteKind site, const HuberPairDesc& pair,
                             const std::vector<PlaceRef>& boundary);

}  // namespace tame
