#pragma once

#include <string>
#include <vector>

#include "tame/huber.hpp"
#include "tame/kummer.hpp"

namespace tame {

/* Free A-module on coset-key labels with a value threshold per label; an
   element sum a_e e belongs iff v(a_e) >= threshold(e) for every label. */
struct ThresholdModule {
    std::vector<std::vector<long long>> labels;
    std::vector<Rat> thresholds;
};

bool threshold_member(const KummerRef& alg, const ThresholdModule& M, const TensorElement& x);

/* Matrix cell c * t^shift; Amitsur differentials are scalar (shift 0). */
struct DiffEntry {
    long long c = 0;
    long long shift = 0;
};

/* Cochain complex with exact monomial matrix entries.  `augmented` marks
   module 0 as the comparison object rather than a Cech degree; `open_ended`
   marks a truncation of a complex that continues rightward. */
struct Complex {
    FqRef F;
    KummerRef alg;
    std::vector<ThresholdModule> modules;
    /* differentials[k][row][col]: modules[k] -> modules[k+1]. */
    std::vector<std::vector<std::vector<DiffEntry>>> differentials;
    bool augmented = false;
    bool open_ended = false;
};

/* 0 -> A+ -> B+ -> B_2+ -> ... -> B_N+ with the alternating-insertion
   differential; d o d = 0 is checked on construction.  N <= 4 and the top
   coset basis is capped. */
Complex amitsur_complex(const KummerRef& alg, int N);

struct HomotopyReport {
    bool pass = true;
    std::vector<std::string> violations;
};

/* Replays the comparison-map identities on the coset basis and on seeded
   integral elements: the stored matrices against the insertion maps,
   d o d = 0, the section identities, (I Phi - id) = dD + Dd with the
   explicit contraction, and integrality preservation by Phi and the slot
   filters.  Violations carry a witness label. */
HomotopyReport verify_homotopy(const Complex& c);

struct DegreeReport {
    int degree = 0;
    long long dim = 0;
    bool stable = false;
    std::string description;
};

struct CohomologyReport {
    std::vector<DegreeReport> degrees;
    long long window = 0;
    /* Windowed dimension of the augmentation module; -1 when none. */
    long long aug_dim = -1;
    long long witnesses = 0;
    bool splitting_exact = true;
};

/* Homology of the monomial window t^j, |j| <= window, per degree; scalar
   complexes split by t-degree and are eliminated slice by slice.  The
   stability flag compares the window against its double. */
CohomologyReport truncated_homology(const Complex& c, long long window);

/* Covering Cech complex A+ -> A+[f] (+) A+[1/f] -> A+[f,1/f] over a
   place-set pair, on the partial-fraction atom basis.  Reports degree 0
   (kernel of the difference map, compared against the A+ window) and degree
   1 (cokernel), and re-splits seeded witnesses through partial fractions to
   certify surjectivity exactly. */
CohomologyReport laurent_cech(const HuberPairDesc& pair, const RatFunc& f, long long window = 16);

/* O+ Cech complex of a one- or two-chart affinoid cover with declared
   intersection; charts are monomial rings (polynomial or Laurent in t). */
CohomologyReport cech_O_plus(const std::vector<HuberPairDesc>& charts,
                             const std::vector<HuberPairDesc>& overlaps, long long window = 16);

/* Structure-sheaf cohomology of the projective line from the standard
   two-chart cover F_q[t] (+) F_q[1/t] -> F_q[t,1/t]. */
CohomologyReport cech_P1_O(const FqRef& F, long long window = 16);

/* Rank over F_q by Gaussian elimination; rows may be ragged-checked. */
long long matrix_rank(const FqRef& F, std::vector<std::vector<uint64_t>> rows);

}  // namespace tame
