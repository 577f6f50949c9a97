#include "tame/fq.hpp"

#include <algorithm>

namespace tame {

namespace {

constexpr uint64_t kTableLimit = 512;

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using BP = std::vector<uint64_t>;  // coeffs ascending over some base field

void bp_trim(BP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int bp_deg(const BP& a) { return static_cast<int>(a.size()) - 1; }

BP bp_mul(const Fq& F, const BP& a, const BP& b) {
    if (a.empty() || b.empty()) return {};
    BP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

/* Remainder modulo a monic divisor. */
BP bp_rem(const Fq& F, BP a, const BP& m) {
    int dm = bp_deg(m);
    while (bp_deg(a) >= dm) {
        uint64_t c = a.back();
        int shift = bp_deg(a) - dm;
        if (c != 0)
            for (int j = 0; j <= dm; ++j)
                a[j + shift] = F.sub(a[j + shift], F.mul(c, m[j]));
        a.pop_back();
        bp_trim(a);
    }
    return a;
}

BP bp_mulmod(const Fq& F, const BP& a, const BP& b, const BP& m) {
    return bp_rem(F, bp_mul(F, a, b), m);
}

BP bp_powmod(const Fq& F, BP a, uint64_t e, const BP& m) {
    BP r{1};
    a = bp_rem(F, std::move(a), m);
    while (e) {
        if (e & 1) r = bp_mulmod(F, r, a, m);
        a = bp_mulmod(F, a, a, m);
        e >>= 1;
    }
    return r;
}

BP bp_gcd(const Fq& F, BP a, BP b) {
    bp_trim(a);
    bp_trim(b);
    while (!b.empty()) {
        uint64_t lead = F.inv(b.back());
        for (auto& c : b) c = F.mul(c, lead);
        BP r = bp_rem(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BP bp_sub(const Fq& F, BP a, const BP& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    bp_trim(a);
    return a;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> ps;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool poly_irreducible_over(const FqRef& F, const std::vector<uint64_t>& coeffs) {
    BP f = coeffs;
    bp_trim(f);
    int d = bp_deg(f);
    if (d < 1) return false;
    uint64_t lead = F->inv(f.back());
    for (auto& c : f) c = F->mul(c, lead);
    if (d == 1) return true;

    const BP x{0, 1};
    /* Rabin: x^(Q^d) = x mod f, and x^(Q^(d/r)) - x coprime to f for prime r | d. */
    BP h = x;
    for (int i = 0; i < d; ++i) h = bp_powmod(*F, h, F->q(), f);
    if (bp_sub(*F, h, x) != BP{}) return false;
    for (long long r : prime_divisors(d)) {
        BP g = x;
        for (int i = 0; i < d / r; ++i) g = bp_powmod(*F, g, F->q(), f);
        BP gc = bp_gcd(*F, bp_sub(*F, g, x), f);
        if (bp_deg(gc) != 0) return false;
    }
    return true;
}

FqRef Fq::prime(long long p) {
    if (!is_prime_ll(p)) fail("UnsupportedDescriptor", "characteristic " + std::to_string(p) + " is not prime");
    if (p > (1LL << 31)) fail("UnsupportedDescriptor", "prime too large");
    auto F = std::shared_ptr<Fq>(new Fq());
    F->p_ = p;
    F->q_ = static_cast<uint64_t>(p);
    F->total_k_ = 1;
    F->build_tables();
    return F;
}

FqRef Fq::make(long long p, int k) {
    if (k < 1) fail("UnsupportedDescriptor", "extension degree must be positive");
    auto base = prime(p);
    return k == 1 ? base : extension(base, k);
}

FqRef Fq::extension(const FqRef& base, int d) {
    if (d < 1) fail("UnsupportedDescriptor", "extension degree must be positive");
    if (d == 1) return base;
    if (base->total_k_ * d > 62)
        fail("UnsupportedDescriptor", "field degree exceeds the representable cap");
    uint64_t q = 1;
    for (int i = 0; i < d; ++i) {
        if (q > (uint64_t(1) << 62) / base->q_)
            fail("UnsupportedDescriptor", "field size exceeds the representable cap");
        q *= base->q_;
    }

    /* Deterministic monic modulus: first irreducible in counter order. */
    BP mod(static_cast<size_t>(d) + 1, 0);
    mod[d] = 1;
    bool found = false;
    uint64_t limit = q;  // q = Q^d candidates
    for (uint64_t c = 0; c < limit; ++c) {
        uint64_t v = c;
        for (int i = 0; i < d; ++i) {
            mod[i] = v % base->q_;
            v /= base->q_;
        }
        if (poly_irreducible_over(base, mod)) {
            found = true;
            break;
        }
    }
    if (!found) fail("UnsupportedDescriptor", "no irreducible modulus found");  // unreachable

    auto F = std::shared_ptr<Fq>(new Fq());
    F->base_ = base;
    F->p_ = base->p_;
    F->deg_ = d;
    F->total_k_ = base->total_k_ * d;
    F->q_ = q;
    F->modulus_ = std::move(mod);
    F->build_tables();
    return F;
}

void Fq::build_tables() {
    if (q_ > kTableLimit) return;
    size_t n = static_cast<size_t>(q_);
    mul_table_.assign(n * n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a; b < n; ++b) {
            uint64_t v = mul_slow(a, b);
            mul_table_[a * n + b] = v;
            mul_table_[b * n + a] = v;
        }
    tables_ = true;  // set before inv so pow uses the fast path
    inv_table_.assign(n, 0);
    for (size_t a = 1; a < n; ++a) inv_table_[a] = pow(a, q_ - 2);
}

uint64_t Fq::add(uint64_t a, uint64_t b) const {
    if (!base_) return (a + b) % q_;
    uint64_t r = 0, mult = 1, Q = base_->q_;
    for (int i = 0; i < deg_; ++i) {
        r += base_->add(a % Q, b % Q) * mult;
        a /= Q;
        b /= Q;
        mult *= Q;
    }
    return r;
}

uint64_t Fq::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Fq::neg(uint64_t a) const {
    if (!base_) return a == 0 ? 0 : q_ - a;
    uint64_t r = 0, mult = 1, Q = base_->q_;
    for (int i = 0; i < deg_; ++i) {
        r += base_->neg(a % Q) * mult;
        a /= Q;
        mult *= Q;
    }
    return r;
}

uint64_t Fq::mul_slow(uint64_t a, uint64_t b) const {
    if (!base_) return static_cast<uint64_t>((static_cast<__int128>(a) * b) % q_);
    BP da = digits(a), db = digits(b);
    BP prod = bp_mul(*base_, da, db);
    prod.resize(2 * static_cast<size_t>(deg_), 0);
    for (int i = 2 * deg_ - 2; i >= deg_; --i) {
        uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < deg_; ++j)
            prod[i - deg_ + j] = base_->sub(prod[i - deg_ + j], base_->mul(c, modulus_[j]));
    }
    prod.resize(static_cast<size_t>(deg_));
    return from_digits(prod);
}

uint64_t Fq::mul(uint64_t a, uint64_t b) const {
    if (tables_) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
}

uint64_t Fq::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t Fq::inv(uint64_t a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero field element");
    if (tables_) return inv_table_[a];
    return pow(a, q_ - 2);
}

uint64_t Fq::frobenius_root(uint64_t a) const {
    uint64_t e = 1;
    for (int i = 0; i < total_k_ - 1; ++i) e *= static_cast<uint64_t>(p_);
    return pow(a, e);
}

long long Fq::trace_prime(uint64_t a) const {
    uint64_t s = 0, x = a;
    for (int i = 0; i < total_k_; ++i) {
        s = add(s, x);
        x = frobenius(x);
    }
    return static_cast<long long>(s);  // lies in the prime subfield, encoded in [0, p)
}

uint64_t Fq::embed_scalar(long long c) const {
    long long r = c % p_;
    if (r < 0) r += p_;
    return static_cast<uint64_t>(r);
}

std::vector<uint64_t> Fq::digits(uint64_t a) const {
    if (!base_) return {a};
    std::vector<uint64_t> d(static_cast<size_t>(deg_));
    uint64_t Q = base_->q_;
    for (int i = 0; i < deg_; ++i) {
        d[i] = a % Q;
        a /= Q;
    }
    return d;
}

uint64_t Fq::from_digits(const std::vector<uint64_t>& d) const {
    uint64_t r = 0, mult = 1, Q = base_ ? base_->q_ : q_;
    for (size_t i = 0; i < d.size(); ++i) {
        r += d[i] * mult;
        mult *= Q;
    }
    return r;
}

uint64_t Fq::primitive_root() const {
    if (q_ > (uint64_t(1) << 20))
        fail("UnsupportedDescriptor", "primitive root search too large");
    auto ps = prime_divisors(static_cast<long long>(q_ - 1));
    for (uint64_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (long long r : ps)
            if (pow(g, (q_ - 1) / static_cast<uint64_t>(r)) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    fail("UnsupportedDescriptor", "no primitive root found");  // unreachable for a field
}

uint64_t Fq::zeta(long long m) const {
    if (m < 1 || (q_ - 1) % static_cast<uint64_t>(m) != 0)
        fail("RootOfUnityUnavailable",
             "no primitive " + std::to_string(m) + "-th root of unity in GF(" + std::to_string(q_) + ")");
    return pow(primitive_root(), (q_ - 1) / static_cast<uint64_t>(m));
}

std::string Fq::elem_str(uint64_t a) const {
    if (!base_) return std::to_string(a);
    auto d = digits(a);
    if (base_->base_) {
        std::string s = "[";
        for (size_t i = 0; i < d.size(); ++i) {
            if (i) s += ",";
            s += base_->elem_str(d[i]);
        }
        return s + "]";
    }
    std::string s;
    for (int i = deg_ - 1; i >= 0; --i) {
        if (d[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(d[i]);
        } else {
            if (d[i] != 1) s += std::to_string(d[i]) + "*";
            s += (i == 1) ? "u" : "u^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

bool Fq::same_field(const Fq& o) const {
    return p_ == o.p_ && total_k_ == o.total_k_ && modulus_ == o.modulus_ &&
           (base_ == nullptr) == (o.base_ == nullptr) &&
           (base_ == nullptr || base_->same_field(*o.base_));
}

}  // namespace tame
