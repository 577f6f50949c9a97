#include "tame/cech.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

#include "tame/errors.hpp"
#include "tame/polyfactor.hpp"

namespace tame {

namespace {

constexpr int kComplexLevelCap = 4;
constexpr long long kComplexBasisCap = 4096;
constexpr long long kWindowCap = 512;
constexpr long long kGlobalBasisCap = 20000;

std::vector<std::vector<long long>> all_keys(const KummerAlgebra& alg, int level) {
    std::vector<std::vector<long long>> keys;
    std::vector<long long> key(static_cast<size_t>(level), 0);
    const long long count = alg.coset_count();
    while (true) {
        keys.push_back(key);
        int slot = 0;
        while (slot < level) {
            if (++key[static_cast<size_t>(slot)] < count) break;
            key[static_cast<size_t>(slot)] = 0;
            ++slot;
        }
        if (slot == level) break;
    }
    return keys;
}

Rat key_threshold(const KummerAlgebra& alg, const std::vector<long long>& key) {
    Rat thr(0);
    for (long long lbl : key) thr = thr - alg.coset_value(lbl);
    return thr;
}

/* Insert the trivial coset before 1-based slot i. */
TensorElement ins_slot(const TensorElement& x, int i) {
    TensorElement out(x.algebra(), x.level() + 1);
    for (const auto& [key, a] : x.coeffs()) {
        std::vector<long long> k2 = key;
        k2.insert(k2.begin() + (i - 1), 0);
        out.add_term(k2, a);
    }
    return out;
}

/* Alternating sum of trivial-coset insertions; level 0 gives the unit map. */
TensorElement amitsur_d(const TensorElement& x) {
    TensorElement out(x.algebra(), x.level() + 1);
    for (int i = 1; i <= x.level() + 1; ++i) {
        TensorElement part = ins_slot(x, i);
        out = (i % 2 == 1) ? out + part : out - part;
    }
    return out;
}

/* Contraction: keep keys whose first coset is trivial and strip that slot;
   level 2 and up, the level-1 variant lands in the base ring. */
TensorElement strip_h(const TensorElement& x) {
    TensorElement out(x.algebra(), x.level() - 1);
    for (const auto& [key, a] : x.coeffs())
        if (key[0] == 0)
            out.add_term(std::vector<long long>(key.begin() + 1, key.end()), a);
    return out;
}

RatFunc strip1(const TensorElement& x) { return x.coeff({0}); }

TensorElement unit_d(const KummerRef& alg, const RatFunc& a) {
    return TensorElement::unit(alg, 1).scaled(a);
}

TensorElement iphi(const TensorElement& x) {
    RatFunc s = phi(x);
    if (s.is_zero()) return TensorElement(x.algebra(), x.level());
    return TensorElement::unit(x.algebra(), x.level()).scaled(s);
}

/* Homotopy operator h o (I Phi - id), one level down; level 2 and up. */
TensorElement homotopy_op(const TensorElement& x) { return strip_h(iphi(x) - x); }

/* Level-1 homotopy operator, valued in the base ring. */
RatFunc homotopy_op1(const TensorElement& x) { return strip1(iphi(x) - x); }

struct Uniformizer {
    RatFunc u;
    Rat val;
};

Uniformizer uniformizer(const KummerAlgebra& alg) {
    const PlaceRef& b = alg.base();
    const FqRef& F = alg.field();
    switch (b->kind()) {
        case PlaceKind::Finite:
            return {RatFunc(b->pi()), Rat(1)};
        case PlaceKind::Infinite:
            return {RatFunc(Poly::constant(F, 1), Poly::t(F)), Rat(1)};
        case PlaceKind::Gauss: {
            const Rat& g = b->gamma();
            if (g > Rat(0)) return {RatFunc::t(F), g};
            if (g < Rat(0)) return {RatFunc(Poly::constant(F, 1), Poly::t(F)), -g};
            fail("InternalError", "zero-scale Gauss base survived construction");
        }
        default:
            fail("UnsupportedDescriptor", "rank-1 base place required");
    }
}

RatFunc t_power(const FqRef& F, long long s) {
    if (s >= 0) return RatFunc(Poly::monomial(F, 1, static_cast<int>(s)));
    return RatFunc(Poly::constant(F, 1), Poly::monomial(F, 1, static_cast<int>(-s)));
}

TensorElement rand_integral(const KummerRef& alg, int level, std::mt19937_64& rng) {
    const FqRef& F = alg->field();
    Uniformizer U = uniformizer(*alg);
    TensorElement x(alg, level);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int n = 0; n < terms; ++n) {
        std::vector<long long> key;
        for (int s = 0; s < level; ++s)
            key.push_back(static_cast<long long>(rng() % static_cast<uint64_t>(alg->coset_count())));
        long long jmin = rat_ceil(key_threshold(*alg, key) / U.val);
        long long j = jmin + static_cast<long long>(rng() % 3);
        uint64_t c = 1 + rng() % (F->q() - 1);
        x.add_term(key, ratfunc_pow(U.u, j) * RatFunc::constant(F, c));
    }
    if (x.is_zero()) x = TensorElement::unit(alg, level);
    return x;
}

/* Image of x under the stored matrix from modules[k] to modules[k+1]. */
TensorElement apply_matrix(const Complex& c, size_t k, const TensorElement& x) {
    const ThresholdModule& src = c.modules[k];
    const ThresholdModule& dst = c.modules[k + 1];
    std::map<std::vector<long long>, size_t> sidx;
    for (size_t i = 0; i < src.labels.size(); ++i) sidx[src.labels[i]] = i;
    TensorElement out(c.alg, static_cast<int>(k) + 1);
    for (const auto& [key, a] : x.coeffs()) {
        auto it = sidx.find(key);
        if (it == sidx.end()) fail("InternalError", "element key outside the module basis");
        size_t col = it->second;
        for (size_t row = 0; row < dst.labels.size(); ++row) {
            const DiffEntry& e = c.differentials[k][row][col];
            if (e.c == 0) continue;
            RatFunc term =
                a * t_power(c.F, e.shift) * RatFunc::constant(c.F, c.F->embed_scalar(e.c));
            out.add_term(dst.labels[row], term);
        }
    }
    return out;
}

Rat slice_value(const Complex& c, long long j) {
    if (!c.alg) return Rat(j);
    return Rat(j) * uniformizer(*c.alg).val;
}

struct WindowDims {
    std::vector<long long> dim;
    std::vector<long long> rank;
};

/* Per-module windowed dimensions and differential ranks over the monomial
   window |j| <= w; complexes with scalar entries split by slice. */
WindowDims windowed_dims(const Complex& c, long long w) {
    const size_t M = c.modules.size();
    WindowDims out;
    out.dim.assign(M, 0);
    out.rank.assign(M > 0 ? M - 1 : 0, 0);
    bool shifted = false;
    for (const auto& mat : c.differentials)
        for (const auto& row : mat)
            for (const DiffEntry& e : row)
                if (e.c != 0 && e.shift != 0) shifted = true;

    if (!shifted) {
        std::map<std::tuple<size_t, std::vector<size_t>, std::vector<size_t>>, long long> cache;
        for (long long j = -w; j <= w; ++j) {
            Rat sv = slice_value(c, j);
            std::vector<std::vector<size_t>> act(M);
            for (size_t k = 0; k < M; ++k) {
                for (size_t i = 0; i < c.modules[k].labels.size(); ++i)
                    if (c.modules[k].thresholds[i] <= sv) act[k].push_back(i);
                out.dim[k] += static_cast<long long>(act[k].size());
            }
            for (size_t k = 0; k + 1 < M; ++k) {
                if (act[k].empty()) continue;
                auto kk = std::make_tuple(k, act[k], act[k + 1]);
                auto hit = cache.find(kk);
                if (hit != cache.end()) {
                    out.rank[k] += hit->second;
                    continue;
                }
                std::vector<bool> live(c.modules[k + 1].labels.size(), false);
                for (size_t i : act[k + 1]) live[i] = true;
                for (size_t col : act[k])
                    for (size_t row = 0; row < c.modules[k + 1].labels.size(); ++row)
                        if (c.differentials[k][row][col].c != 0 && !live[row])
                            fail("WindowTooSmall", "differential image escapes the window");
                std::vector<std::vector<uint64_t>> mat(
                    act[k + 1].size(), std::vector<uint64_t>(act[k].size(), 0));
                for (size_t rr = 0; rr < act[k + 1].size(); ++rr)
                    for (size_t cc = 0; cc < act[k].size(); ++cc)
                        mat[rr][cc] =
                            c.F->embed_scalar(c.differentials[k][act[k + 1][rr]][act[k][cc]].c);
                long long r = matrix_rank(c.F, std::move(mat));
                cache[kk] = r;
                out.rank[k] += r;
            }
        }
        return out;
    }

    /* Shifted entries couple slices; build one global windowed matrix per
       degree over basis pairs (label, j). */
    std::vector<std::vector<std::pair<size_t, long long>>> basis(M);
    std::vector<std::map<std::pair<size_t, long long>, size_t>> index(M);
    long long total = 0;
    for (size_t k = 0; k < M; ++k) {
        for (size_t i = 0; i < c.modules[k].labels.size(); ++i)
            for (long long j = -w; j <= w; ++j)
                if (c.modules[k].thresholds[i] <= slice_value(c, j)) {
                    index[k][{i, j}] = basis[k].size();
                    basis[k].push_back({i, j});
                    ++total;
                }
        out.dim[k] = static_cast<long long>(basis[k].size());
    }
    if (total > kGlobalBasisCap) fail("UnsupportedDescriptor", "windowed basis too large");
    for (size_t k = 0; k + 1 < M; ++k) {
        std::vector<std::vector<uint64_t>> mat(basis[k + 1].size(),
                                               std::vector<uint64_t>(basis[k].size(), 0));
        for (size_t col = 0; col < basis[k].size(); ++col) {
            auto [i, j] = basis[k][col];
            for (size_t row = 0; row < c.modules[k + 1].labels.size(); ++row) {
                const DiffEntry& e = c.differentials[k][row][i];
                if (e.c == 0) continue;
                auto it = index[k + 1].find({row, j + e.shift});
                if (it == index[k + 1].end())
                    fail("WindowTooSmall", "differential image escapes the window");
                mat[it->second][col] = c.F->add(mat[it->second][col], c.F->embed_scalar(e.c));
            }
        }
        out.rank[k] = matrix_rank(c.F, std::move(mat));
    }
    return out;
}

std::string level_witness(int level, const TensorElement& x) {
    std::ostringstream os;
    os << "level " << level << " at " << tensor_element_str(x);
    return os.str();
}

}  // namespace

bool threshold_member(const KummerRef& alg, const ThresholdModule& M, const TensorElement& x) {
    if (!alg) fail("UnsupportedDescriptor", "algebra required");
    std::map<std::vector<long long>, size_t> idx;
    for (size_t i = 0; i < M.labels.size(); ++i) idx[M.labels[i]] = i;
    for (const auto& [key, a] : x.coeffs()) {
        auto it = idx.find(key);
        if (it == idx.end()) fail("UnsupportedDescriptor", "element key outside the module basis");
        Value v = valuation_at(a, *alg->base());
        if (v.is_zero()) continue;
        if (v.exps()[0] < M.thresholds[it->second]) return false;
    }
    return true;
}

long long matrix_rank(const FqRef& F, std::vector<std::vector<uint64_t>> rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) fail("InternalError", "ragged matrix");
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        uint64_t inv = F->inv(rows[rank][c]);
        for (size_t j = c; j < cols; ++j) rows[rank][j] = F->mul(rows[rank][j], inv);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            uint64_t f = rows[r][c];
            for (size_t j = c; j < cols; ++j)
                rows[r][j] = F->sub(rows[r][j], F->mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

Complex amitsur_complex(const KummerRef& alg, int N) {
    if (!alg) fail("UnsupportedDescriptor", "algebra required");
    if (N < 1 || N > kComplexLevelCap) fail("LevelCap", "tensor level exceeds the supported bound");
    long long top = 1;
    for (int k = 0; k < N; ++k) {
        top *= alg->coset_count();
        if (top > kComplexBasisCap) fail("LevelCap", "coset basis exceeds the supported bound");
    }

    Complex c{alg->field(), alg, {}, {}, true, true};
    for (int k = 0; k <= N; ++k) {
        ThresholdModule M;
        M.labels = all_keys(*alg, k);
        for (const auto& key : M.labels) M.thresholds.push_back(key_threshold(*alg, key));
        c.modules.push_back(std::move(M));
    }
    for (int k = 0; k < N; ++k) {
        const auto& src = c.modules[static_cast<size_t>(k)].labels;
        const auto& dst = c.modules[static_cast<size_t>(k) + 1].labels;
        std::map<std::vector<long long>, size_t> didx;
        for (size_t i = 0; i < dst.size(); ++i) didx[dst[i]] = i;
        std::vector<std::vector<DiffEntry>> mat(dst.size(), std::vector<DiffEntry>(src.size()));
        for (size_t col = 0; col < src.size(); ++col) {
            for (int i = 1; i <= k + 1; ++i) {
                std::vector<long long> k2 = src[col];
                k2.insert(k2.begin() + (i - 1), 0);
                mat[didx.at(k2)][col].c += (i % 2 == 1) ? 1 : -1;
            }
        }
        c.differentials.push_back(std::move(mat));
    }
    for (size_t k = 0; k + 1 < c.differentials.size(); ++k) {
        const auto& m1 = c.differentials[k];
        const auto& m2 = c.differentials[k + 1];
        for (size_t row = 0; row < m2.size(); ++row)
            for (size_t col = 0; col < (m1.empty() ? 0 : m1[0].size()); ++col) {
                long long s = 0;
                for (size_t mid = 0; mid < m1.size(); ++mid) s += m2[row][mid].c * m1[mid][col].c;
                if (s != 0) fail("InternalError", "differential does not square to zero");
            }
    }
    return c;
}

HomotopyReport verify_homotopy(const Complex& c) {
    if (!c.alg || !c.augmented)
        fail("UnsupportedDescriptor", "expects a tensor-power comparison complex");
    const KummerRef& alg = c.alg;
    const FqRef& F = c.F;
    const int N = static_cast<int>(c.modules.size()) - 1;
    HomotopyReport rep;
    auto flag = [&](const std::string& s) {
        rep.pass = false;
        rep.violations.push_back(s);
    };

    /* Unit column of the augmentation differential. */
    {
        TensorElement img(alg, 1);
        for (size_t row = 0; row < c.modules[1].labels.size(); ++row) {
            const DiffEntry& e = c.differentials[0][row][0];
            if (e.c == 0) continue;
            img.add_term(c.modules[1].labels[row],
                         t_power(F, e.shift) * RatFunc::constant(F, F->embed_scalar(e.c)));
        }
        if (!(img - TensorElement::unit(alg, 1)).is_zero())
            flag("stored differential disagrees with the unit map, level 0 at 1");
        if (!amitsur_d(TensorElement::unit(alg, 1)).is_zero())
            flag("d o d != 0, level 0 at 1");
        if (N >= 2 && !apply_matrix(c, 1, img).is_zero())
            flag("stored d o d != 0, level 0 at 1");
    }
    for (int k = 1; k < N; ++k) {
        for (const auto& key : c.modules[static_cast<size_t>(k)].labels) {
            TensorElement x = TensorElement::basis(alg, k, key);
            TensorElement dx = amitsur_d(x);
            if (!(apply_matrix(c, static_cast<size_t>(k), x) - dx).is_zero())
                flag("stored differential disagrees with the insertion map, " +
                     level_witness(k, x));
            if (k + 1 < N) {
                if (!amitsur_d(dx).is_zero())
                    flag("d o d != 0, " + level_witness(k, x));
                if (!apply_matrix(c, static_cast<size_t>(k) + 1,
                                  apply_matrix(c, static_cast<size_t>(k), x))
                         .is_zero())
                    flag("stored d o d != 0, " + level_witness(k, x));
            }
        }
    }

    std::vector<RatFunc> samples = {RatFunc::constant(F, 1), RatFunc::t(F),
                                    RatFunc::t(F) + RatFunc::constant(F, 1),
                                    RatFunc::constant(F, 1) / RatFunc::t(F)};
    for (int n = 1; n <= N; ++n)
        for (const RatFunc& a : samples) {
            TensorElement ia = TensorElement::unit(alg, n).scaled(a);
            if (!(phi(ia) == a))
                flag("Phi o I != id, " + level_witness(n, ia));
        }

    std::mt19937_64 rng(0);
    std::vector<std::vector<TensorElement>> probes(static_cast<size_t>(N) + 1);
    for (int n = 1; n < N; ++n) {
        for (const auto& key : c.modules[static_cast<size_t>(n)].labels)
            probes[static_cast<size_t>(n)].push_back(TensorElement::basis(alg, n, key));
        for (int r = 0; r < 8; ++r)
            probes[static_cast<size_t>(n)].push_back(rand_integral(alg, n, rng));
    }

    for (const RatFunc& a : samples)
        if (!(strip1(unit_d(alg, a)) == a))
            flag("contraction identity h d != id, level 0 at scalar");
    for (int n = 1; n < N; ++n)
        for (const TensorElement& x : probes[static_cast<size_t>(n)]) {
            TensorElement back = n == 1 ? unit_d(alg, strip1(x)) : amitsur_d(strip_h(x));
            if (!(back + strip_h(amitsur_d(x)) - x).is_zero())
                flag("contraction identity d h + h d != id, " + level_witness(n, x));
        }

    for (const RatFunc& a : samples)
        if (!homotopy_op1(unit_d(alg, a)).is_zero())
            flag("homotopy identity I Phi - id != dD + Dd, level 0 at scalar");
    for (int n = 1; n < N; ++n)
        for (const TensorElement& x : probes[static_cast<size_t>(n)]) {
            TensorElement lhs = iphi(x) - x;
            TensorElement rhs = homotopy_op(amitsur_d(x));
            rhs = rhs + (n == 1 ? unit_d(alg, homotopy_op1(x)) : amitsur_d(homotopy_op(x)));
            if (!(lhs - rhs).is_zero())
                flag("homotopy identity I Phi - id != dD + Dd, " + level_witness(n, x));
        }

    for (int n = 1; n <= N; ++n)
        for (int r = 0; r < 20; ++r) {
            TensorElement x = rand_integral(alg, n, rng);
            if (!mult_le_one(valuation_at(phi(x), *alg->base())))
                flag("Phi drops integrality, " + level_witness(n, x));
            for (int i = 1; i <= n; ++i)
                if (!is_integral(homotopy_D(i, x)))
                    flag("coefficient filter drops integrality, " + level_witness(n, x));
            bool hkeeps = n == 1 ? mult_le_one(valuation_at(strip1(x), *alg->base()))
                                 : is_integral(strip_h(x));
            if (!hkeeps) flag("contraction drops integrality, " + level_witness(n, x));
        }

    return rep;
}

CohomologyReport truncated_homology(const Complex& c, long long window) {
    if (c.modules.empty()) fail("UnsupportedDescriptor", "empty complex");
    if (c.modules.size() != c.differentials.size() + 1)
        fail("UnsupportedDescriptor", "module and differential counts disagree");
    if (window < 1 || window > kWindowCap) fail("UnsupportedDescriptor", "window out of range");
    WindowDims a = windowed_dims(c, window);
    WindowDims b = windowed_dims(c, 2 * window);
    const size_t M = c.modules.size() - 1;

    auto hom = [&](const WindowDims& W, size_t k, bool ker_only) {
        long long d = W.dim[k];
        if (k < W.rank.size()) d -= W.rank[k];
        if (k >= 1 && !ker_only) d -= W.rank[k - 1];
        return d;
    };

    CohomologyReport rep;
    rep.window = window;
    rep.aug_dim = c.augmented ? a.dim[0] : -1;
    size_t first = c.augmented ? 1 : 0;
    if (first > M) return rep;
    size_t last = M;
    if (c.open_ended) {
        if (M < first + 1) return rep;
        last = M - 1;
    }
    for (size_t k = first; k <= last; ++k) {
        bool ker_only = c.augmented && k == 1;
        long long hw = hom(a, k, ker_only);
        long long h2 = hom(b, k, ker_only);
        DegreeReport dr;
        dr.degree = static_cast<int>(k - first);
        dr.dim = hw;
        if (ker_only) {
            dr.stable = hw == a.dim[0] && h2 == b.dim[0];
            dr.description = hw == a.dim[0] ? "A+" : "";
        } else {
            dr.stable = hw == h2;
            dr.description = hw == 0 ? "0" : "";
        }
        rep.degrees.push_back(dr);
    }
    return rep;
}

namespace {

/* Partial-fraction atom: t^i / pi^e for a finite place, or the monomial t^j. */
struct Atom {
    bool monomial = true;
    long long j = 0;
    size_t pi = 0;
    long long e = 1;
    int i = 0;
    RatFunc val;

    explicit Atom(const FqRef& F) : val(F) {}
};

std::vector<Poly> sorted_unique_pis(std::vector<Poly> pis) {
    auto less = [](const Poly& a, const Poly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.coeffs() < b.coeffs();
    };
    std::sort(pis.begin(), pis.end(), less);
    pis.erase(std::unique(pis.begin(), pis.end()), pis.end());
    return pis;
}

std::vector<Atom> atom_universe(const FqRef& F, const std::vector<Poly>& pis, long long w) {
    std::vector<Atom> atoms;
    for (long long j = 0; j <= w; ++j) {
        Atom a(F);
        a.monomial = true;
        a.j = j;
        a.val = t_power(F, j);
        atoms.push_back(a);
    }
    for (size_t p = 0; p < pis.size(); ++p) {
        const int d = pis[p].deg();
        for (long long e = 1; e * d <= w; ++e)
            for (int i = 0; i < d; ++i) {
                Atom a(F);
                a.monomial = false;
                a.pi = p;
                a.e = e;
                a.i = i;
                a.val = RatFunc(Poly::monomial(F, 1, i), poly_pow(pis[p], e));
                atoms.push_back(a);
            }
    }
    return atoms;
}

struct LaurentDims {
    long long aug = 0;
    long long h0 = 0;
    long long h1 = 0;
};

LaurentDims laurent_dims(const FqRef& F, const std::vector<Poly>& pis, const HuberPairDesc& whole,
                         const RationalSubset& sub, long long w) {
    std::vector<Atom> atoms = atom_universe(F, pis, w);
    std::vector<size_t> ia, ip, im, ib;
    std::map<size_t, size_t> brow;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (in_plus(atoms[i].val, whole)) ia.push_back(i);
        if (in_plus(atoms[i].val, sub.plus)) ip.push_back(i);
        if (in_plus(atoms[i].val, sub.minus)) im.push_back(i);
        if (in_plus(atoms[i].val, sub.both)) {
            brow[i] = ib.size();
            ib.push_back(i);
        }
    }
    std::vector<std::vector<uint64_t>> d1(ib.size(),
                                          std::vector<uint64_t>(ip.size() + im.size(), 0));
    for (size_t c = 0; c < ip.size(); ++c) {
        auto it = brow.find(ip[c]);
        if (it == brow.end()) fail("InternalError", "chart atom missing from the overlap");
        d1[it->second][c] = 1;
    }
    for (size_t c = 0; c < im.size(); ++c) {
        auto it = brow.find(im[c]);
        if (it == brow.end()) fail("InternalError", "chart atom missing from the overlap");
        d1[it->second][ip.size() + c] = F->neg(1);
    }
    long long rank = matrix_rank(F, std::move(d1));
    LaurentDims out;
    out.aug = static_cast<long long>(ia.size());
    out.h0 = static_cast<long long>(ip.size() + im.size()) - rank;
    out.h1 = static_cast<long long>(ib.size()) - rank;
    return out;
}

}  // namespace

CohomologyReport laurent_cech(const HuberPairDesc& pair, const RatFunc& f, long long window) {
    if (pair.ring != RingKind::Field || pair.plus != PlusKind::PlaceSet)
        fail("UnsupportedDescriptor", "place-set pair required");
    if (f.is_zero()) fail("UnsupportedDescriptor", "f must be non-zero");
    if (window < 1 || window > kWindowCap) fail("UnsupportedDescriptor", "window out of range");
    const FqRef& F = pair.F;
    RationalSubset sub = rational_subset(pair, f);

    std::vector<Poly> pis;
    for (const PlaceRef& v : pair.places)
        if (v->kind() == PlaceKind::Finite) pis.push_back(v->pi());
    if (f.den().deg() >= 1)
        for (const auto& [pi, e] : factor_poly(f.den())) pis.push_back(pi);
    if (f.num().deg() >= 1)
        for (const auto& [pi, e] : factor_poly(f.num())) pis.push_back(pi);
    pis = sorted_unique_pis(std::move(pis));

    LaurentDims a = laurent_dims(F, pis, pair, sub, window);
    LaurentDims b = laurent_dims(F, pis, pair, sub, 2 * window);

    CohomologyReport rep;
    rep.window = window;
    rep.aug_dim = a.aug;
    DegreeReport d0;
    d0.degree = 0;
    d0.dim = a.h0;
    d0.stable = a.h0 == a.aug && b.h0 == b.aug;
    d0.description = a.h0 == a.aug ? "A+" : "";
    DegreeReport d1;
    d1.degree = 1;
    d1.dim = a.h1;
    d1.stable = a.h1 == b.h1;
    d1.description = a.h1 == 0 ? "0" : "";
    rep.degrees = {d0, d1};

    /* Constructive surjectivity: split seeded overlap sections through
       partial fractions and re-sum exactly. */
    std::vector<Atom> atoms = atom_universe(F, pis, window);
    std::vector<size_t> ib;
    for (size_t i = 0; i < atoms.size(); ++i)
        if (in_plus(atoms[i].val, sub.both)) ib.push_back(i);
    std::vector<PlaceRef> places;
    for (const Poly& pi : pis) places.push_back(PlaceValuation::finite(pi));
    std::mt19937_64 rng(0);
    rep.witnesses = 20;
    rep.splitting_exact = true;
    for (int wi = 0; wi < 20; ++wi) {
        RatFunc h(F);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int n = 0; n < terms && !ib.empty(); ++n) {
            uint64_t c = 1 + rng() % (F->q() - 1);
            h = h + atoms[ib[rng() % ib.size()]].val * RatFunc::constant(F, c);
        }
        PartialFractions pf = partial_fractions(h, places);
        RatFunc hp(F), hm(F);
        bool ok = true;
        std::vector<RatFunc> comps;
        if (!pf.poly_part.is_zero()) comps.push_back(RatFunc(pf.poly_part));
        for (const auto& [v, part] : pf.parts) comps.push_back(part);
        for (const RatFunc& comp : comps) {
            if (in_plus(comp, sub.plus))
                hp = hp + comp;
            else if (in_plus(comp, sub.minus))
                hm = hm + comp;
            else
                ok = false;
        }
        if (!(hp + hm == h)) ok = false;
        if (!hp.is_zero() && !in_plus(hp, sub.plus)) ok = false;
        if (!hm.is_zero() && !in_plus(hm, sub.minus)) ok = false;
        if (!ok) rep.splitting_exact = false;
    }
    return rep;
}

namespace {

bool mono_in_ring(long long j, const HuberPairDesc& chart) {
    switch (chart.ring) {
        case RingKind::Poly:
            return j >= 0;
        case RingKind::LaurentLoc:
            return true;
        case RingKind::Field:
            return true;
    }
    return false;
}

void check_chart(const HuberPairDesc& chart) {
    if (chart.ring == RingKind::LaurentLoc && !(chart.loc_f == Poly::t(chart.F)))
        fail("UnsupportedDescriptor", "chart covers support localization at t only");
}

std::vector<long long> chart_monomials(const HuberPairDesc& chart, long long w) {
    const FqRef& F = chart.F;
    std::vector<long long> out;
    for (long long j = -w; j <= w; ++j)
        if (mono_in_ring(j, chart) && in_plus(t_power(F, j), chart)) out.push_back(j);
    return out;
}

struct CoverDims {
    long long h0 = 0;
    long long h1 = 0;
};

CoverDims cover_dims(const FqRef& F, const std::vector<HuberPairDesc>& charts,
                     const std::vector<HuberPairDesc>& overlaps, long long w) {
    std::vector<std::vector<long long>> cm;
    for (const auto& ch : charts) cm.push_back(chart_monomials(ch, w));
    CoverDims out;
    if (charts.size() == 1) {
        out.h0 = static_cast<long long>(cm[0].size());
        out.h1 = 0;
        return out;
    }
    std::vector<long long> ov = chart_monomials(overlaps[0], w);
    std::map<long long, size_t> orow;
    for (size_t i = 0; i < ov.size(); ++i) orow[ov[i]] = i;
    size_t cols = cm[0].size() + cm[1].size();
    std::vector<std::vector<uint64_t>> mat(ov.size(), std::vector<uint64_t>(cols, 0));
    for (size_t side = 0; side < 2; ++side)
        for (size_t c = 0; c < cm[side].size(); ++c) {
            auto it = orow.find(cm[side][c]);
            if (it == orow.end())
                fail("UnsupportedDescriptor", "charts do not restrict into the intersection");
            size_t col = side == 0 ? c : cm[0].size() + c;
            mat[it->second][col] = side == 0 ? 1 : F->neg(1);
        }
    long long rank = matrix_rank(F, std::move(mat));
    out.h0 = static_cast<long long>(cols) - rank;
    out.h1 = static_cast<long long>(ov.size()) - rank;
    return out;
}

CohomologyReport cover_report(const FqRef& F, const std::vector<HuberPairDesc>& charts,
                              const std::vector<HuberPairDesc>& overlaps, long long window) {
    CoverDims a = cover_dims(F, charts, overlaps, window);
    CoverDims b = cover_dims(F, charts, overlaps, 2 * window);
    CohomologyReport rep;
    rep.window = window;
    DegreeReport d0;
    d0.degree = 0;
    d0.dim = a.h0;
    if (charts.size() == 1) {
        d0.stable = true;
        d0.description = "sections";
    } else {
        d0.stable = a.h0 == b.h0;
        d0.description = a.h0 == 1 ? "constants" : (a.h0 == 0 ? "0" : "");
    }
    DegreeReport d1;
    d1.degree = 1;
    d1.dim = a.h1;
    d1.stable = a.h1 == b.h1;
    d1.description = a.h1 == 0 ? "0" : "";
    rep.degrees = {d0, d1};
    return rep;
}

}  // namespace

CohomologyReport cech_O_plus(const std::vector<HuberPairDesc>& charts,
                             const std::vector<HuberPairDesc>& overlaps, long long window) {
    if (charts.empty() || charts.size() > 2)
        fail("UnsupportedDescriptor", "one- or two-chart covers only");
    if (overlaps.size() != (charts.size() == 2 ? 1u : 0u))
        fail("UnsupportedDescriptor", "each chart pair needs exactly one declared intersection");
    if (window < 1 || window > kWindowCap) fail("UnsupportedDescriptor", "window out of range");
    for (const auto& ch : charts) check_chart(ch);
    for (const auto& ov : overlaps) check_chart(ov);
    return cover_report(charts[0].F, charts, overlaps, window);
}

CohomologyReport cech_P1_O(const FqRef& F, long long window) {
    if (window < 1 || window > kWindowCap) fail("UnsupportedDescriptor", "window out of range");
    auto dims = [&](long long w) {
        /* F_q[t] (+) F_q[1/t] -> F_q[t,1/t] on monomials. */
        std::vector<std::vector<uint64_t>> mat(
            static_cast<size_t>(2 * w + 1),
            std::vector<uint64_t>(static_cast<size_t>(2 * w + 2), 0));
        for (long long j = 0; j <= w; ++j) mat[static_cast<size_t>(j + w)][static_cast<size_t>(j)] = 1;
        for (long long j = -w; j <= 0; ++j)
            mat[static_cast<size_t>(j + w)][static_cast<size_t>(w + 1 + j + w)] = F->neg(1);
        long long rank = matrix_rank(F, std::move(mat));
        CoverDims out;
        out.h0 = (2 * w + 2) - rank;
        out.h1 = (2 * w + 1) - rank;
        return out;
    };
    CoverDims a = dims(window);
    CoverDims b = dims(2 * window);
    CohomologyReport rep;
    rep.window = window;
    DegreeReport d0;
    d0.degree = 0;
    d0.dim = a.h0;
    d0.stable = a.h0 == b.h0;
    d0.description = a.h0 == 1 ? "constants" : "";
    DegreeReport d1;
    d1.degree = 1;
    d1.dim = a.h1;
    d1.stable = a.h1 == b.h1;
    d1.description = a.h1 == 0 ? "0" : "";
    rep.degrees = {d0, d1};
    return rep;
}

}  // namespace tame
