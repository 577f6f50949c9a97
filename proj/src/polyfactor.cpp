#include "tame/polyfactor.hpp"

#include <algorithm>
#include <random>

#include "tame/errors.hpp"

namespace tame {

namespace {

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

uint64_t hash_poly(const Poly& f) {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ f.field()->q();
    for (uint64_t c : f.coeffs()) h = (h ^ c) * 0x100000001b3ull;
    return h;
}

unsigned __int128 ipow128(uint64_t b, int e) {
    const unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    unsigned __int128 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > kMax / b) fail("Overflow", "field too large for equal-degree splitting");
        r *= b;
    }
    return r;
}

/* f = g(t^p) -> g; coefficients get their unique p-th roots. */
Poly pth_root(const Poly& f) {
    const FqRef& F = f.field();
    const int p = static_cast<int>(F->p());
    std::vector<uint64_t> out;
    for (int i = 0; i <= f.deg(); i += p) out.push_back(F->frobenius_root(f.coef(i)));
    return Poly(F, std::move(out));
}

/* Yun's decomposition adapted to characteristic p: the leftover gcd part is a
   polynomial in t^p and recurses through pth_root with multiplicity scaled
   by p. */
void squarefree_parts(const Poly& fin, int mult, std::vector<std::pair<Poly, int>>& out) {
    Poly f = fin.monic();
    if (f.deg() <= 0) return;
    Poly c = poly_gcd(f, f.derivative());
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.deg() > 0) out.emplace_back(z, mult * i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.deg() > 0) squarefree_parts(pth_root(c), mult * static_cast<int>(f.field()->p()), out);
}

/* f monic squarefree; returns (product of the irreducible factors of degree d, d). */
std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    const FqRef& F = f.field();
    const Poly x = Poly::t(F);
    std::vector<std::pair<Poly, int>> out;
    Poly h = x % f;
    int d = 0;
    while (f.deg() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, F->q(), f);
        Poly g = poly_gcd(h - x, f);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.deg() > 0) out.emplace_back(f, f.deg());
    return out;
}

Poly random_below(const FqRef& F, int deg, std::mt19937_64& rng) {
    std::vector<uint64_t> c(static_cast<size_t>(deg));
    for (auto& v : c) v = rng() % F->q();
    return Poly(F, std::move(c));
}

/* Cantor-Zassenhaus; f a monic product of irreducibles of degree d. */
void equal_degree(const Poly& fin, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (fin.deg() == d) {
        out.push_back(fin.monic());
        return;
    }
    const FqRef& F = fin.field();
    const Poly one = Poly::constant(F, 1);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Poly a = random_below(F, fin.deg(), rng);
        if (a.deg() < 1) continue;
        Poly g(F);
        if (F->p() == 2) {
            Poly tr = a;
            Poly cur = a;
            for (int i = 1; i < F->degree() * d; ++i) {
                cur = mulmod(cur, cur, fin);
                tr = tr + cur;
            }
            g = poly_gcd(tr, fin);
        } else {
            unsigned __int128 e = (ipow128(F->q(), d) - 1) / 2;
            g = poly_gcd(powmod(a, e, fin) - one, fin);
        }
        if (g.deg() > 0 && g.deg() < fin.deg()) {
            equal_degree(g, d, rng, out);
            equal_degree(fin / g, d, rng, out);
            return;
        }
    }
    fail("InternalError", "equal-degree splitting did not converge");
}

}  // namespace

Poly powmod(const Poly& a, unsigned __int128 e, const Poly& m) {
    if (m.is_zero()) fail("DivisionByZero", "zero modulus");
    Poly base = a % m;
    Poly r = Poly::constant(a.field(), 1) % m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<Poly, int>> factor_poly(const Poly& f) {
    if (f.is_zero()) fail("UnsupportedDescriptor", "cannot factor the zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (f.deg() == 0) return out;
    std::mt19937_64 rng(hash_poly(f));
    std::vector<std::pair<Poly, int>> sq;
    squarefree_parts(f, 1, sq);
    for (const auto& [part, mult] : sq) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

std::vector<uint64_t> poly_roots(const Poly& f) {
    if (f.is_zero()) fail("UnsupportedDescriptor", "roots of the zero polynomial");
    const FqRef& F = f.field();
    std::vector<uint64_t> roots;
    for (const auto& [g, mult] : factor_poly(f)) {
        (void)mult;
        if (g.deg() == 1) roots.push_back(F->neg(g.coef(0)));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) return false;
    return poly_irreducible_over(f.field(), f.coeffs());
}

}  // namespace tame
