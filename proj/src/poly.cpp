#include "tame/poly.hpp"

#include "tame/errors.hpp"

namespace tame {

namespace {

void check_same(const Poly& a, const Poly& b) {
    if (!a.field()->same_field(*b.field()))
        fail("UnsupportedDescriptor", "polynomials over different fields");
}

void check_cap(int deg) {
    if (deg > kDegreeCap) fail("DegreeCap", "degree " + std::to_string(deg) + " exceeds cap");
}

}  // namespace

Poly::Poly(FqRef F, std::vector<uint64_t> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) {
    trim();
    check_cap(deg());
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FqRef& F, uint64_t c) {
    Poly r(F);
    if (c != 0) r.c_ = {c};
    return r;
}

Poly Poly::t(const FqRef& F) { return monomial(F, 1, 1); }

Poly Poly::monomial(const FqRef& F, uint64_t c, int deg) {
    check_cap(deg);
    Poly r(F);
    if (c != 0) {
        r.c_.assign(static_cast<size_t>(deg) + 1, 0);
        r.c_.back() = c;
    }
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r(a.F_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.F_->add(a.coef(static_cast<int>(i)), b.coef(static_cast<int>(i)));
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = F_->neg(x);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly r(a.F_);
    if (a.is_zero() || b.is_zero()) return r;
    check_cap(a.deg() + b.deg());
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = a.F_->add(r.c_[i + j], a.F_->mul(a.c_[i], b.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::scaled(uint64_t s) const {
    Poly r(*this);
    for (auto& x : r.c_) x = F_->mul(x, s);
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(F_->inv(lead()));
}

Poly Poly::derivative() const {
    Poly r(F_);
    if (deg() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = F_->mul(c_[i], F_->embed_scalar(static_cast<long long>(i)));
    r.trim();
    return r;
}

uint64_t Poly::eval(uint64_t x) const {
    uint64_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::shifted(uint64_t a) const {
    /* Horner in (t + a). */
    Poly r(F_);
    Poly lin(F_, {a, 1});
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly::constant(F_, c_[i]);
    return r;
}

int Poly::ord_at(const Poly& pi) const {
    if (is_zero()) fail("DivisionByZero", "order of the zero polynomial");
    int ord = 0;
    Poly cur(*this);
    while (true) {
        auto [q, r] = divrem(cur, pi);
        if (!r.is_zero()) return ord;
        cur = std::move(q);
        ++ord;
    }
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    const auto& F = a.field();
    Poly q(F), r(a);
    if (a.deg() < b.deg()) return {q, r};
    std::vector<uint64_t> qc(static_cast<size_t>(a.deg() - b.deg()) + 1, 0);
    std::vector<uint64_t> rc(r.coeffs());
    uint64_t linv = F->inv(b.lead());
    for (int i = a.deg(); i >= b.deg(); --i) {
        uint64_t c = rc[static_cast<size_t>(i)];
        if (c == 0) continue;
        uint64_t f = F->mul(c, linv);
        qc[static_cast<size_t>(i - b.deg())] = f;
        for (int j = 0; j <= b.deg(); ++j)
            rc[static_cast<size_t>(i - b.deg() + j)] =
                F->sub(rc[static_cast<size_t>(i - b.deg() + j)], F->mul(f, b.coef(j)));
    }
    return {Poly(F, std::move(qc)), Poly(F, std::move(rc))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly poly_pow(const Poly& a, long long e) {
    if (e < 0) fail("DivisionByZero", "negative polynomial power");
    Poly r = Poly::constant(a.field(), 1), base = a;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

Poly compose(const Poly& a, const Poly& b) {
    Poly r(a.field());
    for (int i = a.deg(); i >= 0; --i) r = r * b + Poly::constant(a.field(), a.coef(i));
    return r;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail("DivisionByZero", "zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (den_.lead() != 1) {
        uint64_t linv = num_.field()->inv(den_.lead());
        num_ = num_.scaled(linv);
        den_ = den_.scaled(linv);
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) fail("DivisionByZero", "division by the zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail("DivisionByZero", "inverse of the zero function");
    return RatFunc(den_, num_);
}

RatFunc ratfunc_pow(const RatFunc& a, long long e) {
    if (e < 0) return ratfunc_pow(a.inv(), -e);
    RatFunc r = RatFunc::constant(a.field(), 1), base = a;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

}  // namespace tame
