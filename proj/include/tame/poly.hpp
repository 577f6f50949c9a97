#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tame/fq.hpp"

namespace tame {

inline constexpr int kDegreeCap = 4096;

/* Dense univariate polynomial over a shared Fq; coefficients ascending,
   always trimmed (no trailing zeros).  Zero polynomial has empty coeffs and
   degree -1. */
class Poly {
public:
    explicit Poly(FqRef F) : F_(std::move(F)) {}
    Poly(FqRef F, std::vector<uint64_t> coeffs);

    static Poly constant(const FqRef& F, uint64_t c);
    static Poly t(const FqRef& F);
    static Poly monomial(const FqRef& F, uint64_t c, int deg);

    const FqRef& field() const { return F_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    uint64_t coef(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
    }
    uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    bool is_monic() const { return lead() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly scaled(uint64_t s) const;
    Poly monic() const;
    Poly derivative() const;
    uint64_t eval(uint64_t x) const;
    Poly shifted(uint64_t a) const;  // t -> t + a

    /* Exact order of vanishing: largest k with pi^k | this.  Requires non-zero. */
    int ord_at(const Poly& pi) const;

private:
    FqRef F_;
    std::vector<uint64_t> c_;
    void trim();
};

/* Quotient and remainder; divisor non-zero. */
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact or truncating per divrem
Poly operator%(const Poly& a, const Poly& b);

Poly poly_gcd(Poly a, Poly b);  // monic gcd
Poly poly_pow(const Poly& a, long long e);
/* a(b(t)) by Horner. */
Poly compose(const Poly& a, const Poly& b);

/* Quotient of polynomials, kept normalized: denominator monic, coprime to
   the numerator.  Zero is 0/1. */
class RatFunc {
public:
    explicit RatFunc(FqRef F) : num_(F), den_(Poly::constant(F, 1)) {}
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.field(), 1)) {}
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const FqRef& F, uint64_t c) { return RatFunc(Poly::constant(F, c)); }
    static RatFunc t(const FqRef& F) { return RatFunc(Poly::t(F)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FqRef& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc inv() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    Poly num_, den_;
    void normalize();
};

RatFunc ratfunc_pow(const RatFunc& a, long long e);

}  // namespace tame
