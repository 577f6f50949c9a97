#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tame/places.hpp"
#include "tame/poly.hpp"
#include "tame/rational.hpp"
#include "tame/value.hpp"

namespace tame {

class KummerAlgebra;
using KummerRef = std::shared_ptr<const KummerAlgebra>;

/* B = A[T_1..T_r]/(T_i^{m_i} - alpha_i) over A = F_q(t), valued at a rank-1
   place.  Requires gcd(m_i, p) = 1, mu_{lcm(m_i)} in F_q, and pairwise
   distinct e_gamma values modulo the base value group.  Coset labels run
   through prod Z/m_i in mixed radix with radix m_1 fastest; label 0 is the
   trivial coset e_0 = 1. */
class KummerAlgebra {
public:
    static KummerRef make(FqRef F, PlaceRef base, std::vector<long long> m,
                          std::vector<RatFunc> alpha);

    const FqRef& field() const { return F_; }
    const PlaceRef& base() const { return base_; }
    const std::vector<long long>& exponents() const { return m_; }
    const std::vector<RatFunc>& units() const { return alpha_; }
    long long zeta_order() const { return lcm_; }
    uint64_t zeta() const { return zeta_; }

    size_t gens() const { return m_.size(); }
    long long coset_count() const { return count_; }
    std::vector<long long> coset_tuple(long long label) const;
    long long coset_label(const std::vector<long long>& tuple) const;
    /* v(e_gamma) = sum_i gamma_i v(alpha_i) / m_i. */
    const Rat& coset_value(long long label) const { return values_[static_cast<size_t>(label)]; }
    const Rat& unit_value(size_t i) const { return unit_values_[i]; }
    const GroupLattice& lattice() const { return lattice_; }

private:
    KummerAlgebra(FqRef F, PlaceRef base, std::vector<long long> m, std::vector<RatFunc> alpha);

    FqRef F_;
    PlaceRef base_;
    std::vector<long long> m_;
    std::vector<RatFunc> alpha_;
    long long lcm_ = 1;
    uint64_t zeta_ = 1;
    long long count_ = 1;
    std::vector<Rat> unit_values_;
    std::vector<Rat> values_;
    GroupLattice lattice_;
};

/* Element of B_n as a finite map from n-tuples of coset labels to
   coefficients; absent keys are zero and stored coefficients are non-zero. */
class TensorElement {
public:
    TensorElement(KummerRef alg, int level);

    static TensorElement unit(const KummerRef& alg, int level);
    static TensorElement basis(const KummerRef& alg, int level, const std::vector<long long>& key);

    const KummerRef& algebra() const { return alg_; }
    int level() const { return level_; }
    const std::map<std::vector<long long>, RatFunc>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    RatFunc coeff(const std::vector<long long>& key) const;
    void add_term(const std::vector<long long>& key, const RatFunc& a);

    TensorElement scaled(const RatFunc& c) const;
    TensorElement operator-() const;
    friend TensorElement operator+(const TensorElement& x, const TensorElement& y);
    friend TensorElement operator-(const TensorElement& x, const TensorElement& y);

private:
    KummerRef alg_;
    int level_;
    std::map<std::vector<long long>, RatFunc> coeffs_;
};

/* Componentwise product with carries T_i^{m_i} = alpha_i. */
TensorElement multiply(const TensorElement& x, const TensorElement& y);

/* sigma in G = prod Z/m_i acts by T_i -> zeta^(lcm/m_i * sigma_i) T_i. */
using GaloisElem = std::vector<long long>;

/* m_sigma(b_1 x ... x b_n) = sigma_1(b_1) ... sigma_{n-1}(b_{n-1}) b_n,
   a level-1 element; sigmas has length level - 1. */
TensorElement m_sigma(const TensorElement& x, const std::vector<GaloisElem>& sigmas);

/* Additive valuation of a level-1 element: min over cosets of
   v(a_gamma) + v(e_gamma), exact because distinct cosets never share a
   value class.  Zero is the absorbing Value. */
Value b_valuation(const TensorElement& x);

/* sup over Spa(B_n) of |x| = max over all |G|^{n-1} twist tuples of
   |m_sigma(x)|, returned additively; x must be non-zero. */
Value sup_value(const TensorElement& x);

/* Threshold criterion: every coefficient satisfies
   v(a_key) + sum_j v(e_{key_j}) >= 0. */
bool is_integral(const TensorElement& x);

/* Independent check through the splitting B_n = prod_sigma B: x is integral
   iff every component m_sigma(x) has non-negative valuation. */
bool is_integral_oracle(const TensorElement& x);

/* Monic minimal polynomial of x acting on the coset basis of B_n, ascending
   coefficients, by exact Krylov linear algebra over F_q(t); basis size is
   capped. */
std::vector<RatFunc> minimal_polynomial(const TensorElement& x);

struct Vandermonde {
    long long m = 0;
    int n = 1;
    long long size = 1;
    std::vector<std::vector<uint64_t>> V;
    std::vector<std::vector<uint64_t>> Vinv;
};

/* The m^(n-1) x m^(n-1) character matrix V[i][j] = zeta^(i_1 j_1 + ... )
   over F_q and its exact inverse. */
Vandermonde vandermonde(const FqRef& F, long long m, int n);

/* Coefficient at the all-trivial coset tuple. */
RatFunc phi(const TensorElement& x);

/* Applies the coefficient section to the first i-1 slots: keeps exactly the
   keys whose first i-1 cosets are trivial; 1 <= i <= level. */
TensorElement homotopy_D(int i, const TensorElement& x);

/* "m=2:alpha=t" or "m=2,3:alpha=t,t+1". */
KummerRef parse_kummer(const std::string& s, const FqRef& F, const PlaceRef& base);
std::string kummer_str(const KummerAlgebra& alg);

/* Terms "coef * slot(x)slot" joined by " + "; slot "1" or "T1^2T2"; the
   coefficient is omitted when 1 and parenthesized when it contains a space
   or '*'. */
TensorElement parse_tensor_element(const std::string& s, const KummerRef& alg, int level);
std::string tensor_element_str(const TensorElement& x);

}  // namespace tame
