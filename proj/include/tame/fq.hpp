#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tame/errors.hpp"

namespace tame {

class Fq;
using FqRef = std::shared_ptr<const Fq>;

/* Finite field, either F_p or an extension of another Fq by a deterministic
   monic irreducible modulus.  Elements are uint64_t values packing base-field
   digits in radix base->q(); the base field embeds as the digit-0 slice, so an
   element of F_q keeps its encoding inside every extension of F_q. */
class Fq {
public:
    static FqRef prime(long long p);
    static FqRef make(long long p, int k);
    static FqRef extension(const FqRef& base, int d);

    long long p() const { return p_; }
    int degree() const { return total_k_; }  // over F_p
    uint64_t q() const { return q_; }
    const FqRef& base() const { return base_; }
    int deg_over_base() const { return deg_; }
    const std::vector<uint64_t>& modulus() const { return modulus_; }

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
    uint64_t pow(uint64_t a, uint64_t e) const;

    uint64_t frobenius(uint64_t a) const { return pow(a, static_cast<uint64_t>(p_)); }
    /* Unique d with d^p = a. */
    uint64_t frobenius_root(uint64_t a) const;
    /* Tr to the prime subfield, returned in [0, p). */
    long long trace_prime(uint64_t a) const;

    uint64_t embed_scalar(long long c) const;
    /* Digits of a over the base field, length deg_over_base. */
    std::vector<uint64_t> digits(uint64_t a) const;
    uint64_t from_digits(const std::vector<uint64_t>& d) const;

    /* Multiplicative generator; deterministic. */
    uint64_t primitive_root() const;
    /* Primitive m-th root of unity; requires m | q-1. */
    uint64_t zeta(long long m) const;

    /* "0", "2", "u", "u+1", "2*u^2+u"; towers use nested digit brackets. */
    std::string elem_str(uint64_t a) const;

    bool same_field(const Fq& o) const;

private:
    Fq() = default;

    FqRef base_;                     // null for prime field
    long long p_ = 0;
    int deg_ = 1;                    // over base
    int total_k_ = 1;                // over F_p
    uint64_t q_ = 0;
    std::vector<uint64_t> modulus_;  // monic over base, size deg_+1; empty for prime

    std::vector<uint64_t> mul_table_;
    std::vector<uint64_t> inv_table_;
    bool tables_ = false;

    uint64_t mul_slow(uint64_t a, uint64_t b) const;
    void build_tables();
};

/* Irreducibility over an arbitrary Fq base (Rabin's criterion); coeffs
   ascending, leading coefficient non-zero. */
bool poly_irreducible_over(const FqRef& F, const std::vector<uint64_t>& coeffs);

}  // namespace tame
