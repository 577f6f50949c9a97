#include "tame/artinschreier.hpp"

#include <algorithm>
#include <set>

#include "tame/errors.hpp"

namespace tame {

namespace {

constexpr long long kDegreeBoundCap = 512;

/* F_p coordinates of a, flattened through the extension tower. */
void fp_digits_into(const FqRef& F, uint64_t a, std::vector<uint64_t>& out) {
    if (!F->base()) {
        out.push_back(a);
        return;
    }
    for (uint64_t d : F->digits(a)) fp_digits_into(F->base(), d, out);
}

std::vector<uint64_t> fp_digits(const FqRef& F, uint64_t a) {
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(F->degree()));
    fp_digits_into(F, a, out);
    return out;
}

uint64_t fp_pack(const FqRef& F, const std::vector<uint64_t>& d, size_t& pos) {
    if (!F->base()) return d.at(pos++);
    std::vector<uint64_t> base_digits(static_cast<size_t>(F->deg_over_base()));
    for (auto& b : base_digits) b = fp_pack(F->base(), d, pos);
    return F->from_digits(base_digits);
}

uint64_t fp_unit(const FqRef& F, int i) {
    std::vector<uint64_t> d(static_cast<size_t>(F->degree()), 0);
    d[static_cast<size_t>(i)] = 1;
    size_t pos = 0;
    return fp_pack(F, d, pos);
}

/* Sorted image of wp on F_q. */
std::vector<uint64_t> wp_image(const FqRef& F) {
    std::vector<uint64_t> im;
    im.reserve(static_cast<size_t>(F->q()));
    for (uint64_t x = 0; x < F->q(); ++x) im.push_back(wp(F, x));
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
}

uint64_t constant_tag_of(const FqRef& F, uint64_t c, const std::vector<uint64_t>& im) {
    for (uint64_t x = 0; x < F->q(); ++x)
        if (std::binary_search(im.begin(), im.end(), F->sub(c, x))) return x;
    throw Error("InternalError", "wp image does not cover the class of the constant");
}

SectionRing validated(const SectionRing& ring) {
    if (!ring.F) throw Error("UnsupportedDescriptor", "section ring needs a field");
    if (ring.kind == SectionRing::Kind::PlaceSet) {
        if (ring.places.empty())
            throw Error("UnsupportedDescriptor", "place-set ring needs at least one place");
        for (const auto& p : ring.places)
            if (!p || p->kind() != PlaceKind::Finite)
                throw Error("UnsupportedDescriptor",
                            "place-set section rings support finite places only");
    } else if (!ring.places.empty()) {
        throw Error("UnsupportedDescriptor", "places are only meaningful for place-set rings");
    }
    return ring;
}

/* Rank of wp: V_M -> V_N on F_p coordinates; columns are basis images. */
long long window_rank(const FqRef& F, long long M, long long N) {
    const int k = F->degree();
    const long long p = F->p();
    FqRef P = Fq::prime(p);
    std::vector<std::vector<uint64_t>> cols;
    cols.reserve(static_cast<size_t>(k * (M + 1)));
    for (long long j = 0; j <= M; ++j) {
        for (int i = 0; i < k; ++i) {
            uint64_t b = fp_unit(F, i);
            std::vector<uint64_t> col(static_cast<size_t>(k * (N + 1)), 0);
            auto add_at = [&](long long deg, uint64_t coef, bool negate) {
                std::vector<uint64_t> d = fp_digits(F, negate ? F->neg(coef) : coef);
                for (int s = 0; s < k; ++s) {
                    auto idx = static_cast<size_t>(deg * k + s);
                    col[idx] = P->add(col[idx], d[static_cast<size_t>(s)]);
                }
            };
            add_at(j * p, F->frobenius(b), false);
            add_at(j, b, true);
            cols.push_back(std::move(col));
        }
    }
    return matrix_rank(P, std::move(cols));
}

HuberPairDesc a1_over_a1_chart(const FqRef& F) {
    return HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {RatFunc::t(F)});
}

HuberPairDesc a1_over_point_chart(const FqRef& F) {
    return HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {});
}

void require_cover(const CohomologyReport& rep, long long h0, const char* what) {
    if (rep.degrees.size() < 2 || rep.degrees[0].dim != h0 || rep.degrees[1].dim != 0)
        throw Error("InternalError", std::string("chart cover of ") + what +
                                         " does not reduce to its global sections");
}

}  // namespace

uint64_t wp(const FqRef& F, uint64_t a) { return F->sub(F->frobenius(a), a); }

Poly wp(const Poly& g) { return poly_pow(g, g.field()->p()) - g; }

WpClass wp_reduce(const Poly& f) {
    const FqRef& F = f.field();
    const long long p = F->p();
    std::vector<uint64_t> c(static_cast<size_t>(std::max<long long>(f.deg(), 0)) + 1, 0);
    for (long long e = 0; e <= f.deg(); ++e) c[static_cast<size_t>(e)] = f.coef(e);
    for (long long e = static_cast<long long>(c.size()) - 1; e >= 1; --e) {
        if (c[static_cast<size_t>(e)] == 0 || e % p != 0) continue;
        auto root = F->frobenius_root(c[static_cast<size_t>(e)]);
        c[static_cast<size_t>(e / p)] = F->add(c[static_cast<size_t>(e / p)], root);
        c[static_cast<size_t>(e)] = 0;
    }
    WpClass out{Poly(F), constant_tag_of(F, c[0], wp_image(F))};
    c[0] = out.constant_tag;
    out.rep = Poly(F, std::move(c));
    return out;
}

SectionRing SectionRing::constants(FqRef F) { return {std::move(F), Kind::Constants, {}}; }

SectionRing SectionRing::polynomials(FqRef F) { return {std::move(F), Kind::Polynomials, {}}; }

SectionRing SectionRing::place_set(FqRef F, std::vector<PlaceRef> places) {
    return {std::move(F), Kind::PlaceSet, std::move(places)};
}

CokerReport coker_dim(const SectionRing& ring_in, long long N) {
    SectionRing ring = validated(ring_in);
    if (N < 0 || N > kDegreeBoundCap)
        throw Error("UnsupportedDescriptor", "degree bound out of range");
    const FqRef& F = ring.F;
    const int k = F->degree();
    CokerReport rep;
    if (ring.kind == SectionRing::Kind::Constants) {
        FqRef P = Fq::prime(F->p());
        std::vector<std::vector<uint64_t>> cols;
        for (int i = 0; i < k; ++i) cols.push_back(fp_digits(F, wp(F, fp_unit(F, i))));
        rep.target_dim = k;
        rep.domain_dim = k;
        rep.rank = matrix_rank(P, std::move(cols));
        rep.dim = k - rep.rank;
        long long classes = static_cast<long long>(F->q()) /
                            static_cast<long long>(wp_image(F).size());
        rep.canonical_dim = 0;
        while (classes > 1) {
            classes /= F->p();
            ++rep.canonical_dim;
        }
    } else {
        const long long M = N / F->p();
        rep.target_dim = k * (N + 1);
        rep.domain_dim = k * (M + 1);
        rep.rank = window_rank(F, M, N);
        rep.dim = rep.target_dim - rep.rank;
        rep.canonical_dim = 1 + k * (N - M);
    }
    if (rep.canonical_dim != rep.dim)
        throw Error("OracleMismatch",
                    "canonical form count " + std::to_string(rep.canonical_dim) +
                        " disagrees with the elimination dimension " + std::to_string(rep.dim));
    return rep;
}

CohomologyTable tame_cohomology(const SpaceDesc& space, const std::vector<long long>& windows) {
    const FqRef& F = space.F;
    if (!F) throw Error("UnsupportedDescriptor", "space descriptor needs a field");
    if (windows.empty())
        throw Error("UnsupportedDescriptor", "at least one truncation window is required");
    for (size_t i = 0; i < windows.size(); ++i) {
        if (windows[i] < 1 || windows[i] > kDegreeBoundCap)
            throw Error("UnsupportedDescriptor", "truncation window out of range");
        if (i > 0 && windows[i] <= windows[i - 1])
            throw Error("UnsupportedDescriptor", "truncation windows must increase");
    }
    if (space.kind != SpaceKind::PlaceSetPair && !space.places.empty())
        throw Error("UnsupportedDescriptor", "places are only meaningful for place-set pairs");

    Poly t = Poly::t(F);
    RatFunc rt = RatFunc::t(F);
    RatFunc rt_inv = rt.inv();
    SectionRing sections = SectionRing::constants(F);
    CohomologyTable table;

    switch (space.kind) {
        case SpaceKind::A1OverP1: {
            std::vector<HuberPairDesc> charts = {
                HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {rt}),
                HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt_inv})};
            std::vector<HuberPairDesc> overlaps = {
                HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt, rt_inv})};
            require_cover(cech_O_plus(charts, overlaps, 16), 1, "the affine line");
            CohomologyReport line = cech_P1_O(F, 16);
            require_cover(line, 1, "the projective line");
            /* Constant-coefficient degree one of the projective line, via the
               vanishing just recomputed: the cokernel of wp on its sections. */
            table.reference_h1 = coker_dim(SectionRing::constants(F), 0).dim;
            break;
        }
        case SpaceKind::GmOverPoint: {
            std::vector<HuberPairDesc> charts = {
                HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt}),
                HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt_inv})};
            std::vector<HuberPairDesc> overlaps = {
                HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {rt, rt_inv})};
            require_cover(cech_O_plus(charts, overlaps, 16), 1, "the punctured line");
            break;
        }
        case SpaceKind::A1OverPoint: {
            require_cover(cech_O_plus({a1_over_point_chart(F)}, {}, 16), 1,
                          "the affine line over the point");
            break;
        }
        case SpaceKind::A1OverA1: {
            CohomologyReport rep = cech_O_plus({a1_over_a1_chart(F)}, {}, 16);
            require_cover(rep, 17, "the affine line over itself");
            sections = SectionRing::polynomials(F);
            break;
        }
        case SpaceKind::PlaceSetPair: {
            sections = validated(SectionRing::place_set(F, space.places));
            HuberPairDesc pair = HuberPairDesc::field_with_places(F, space.places);
            CohomologyReport rep = laurent_cech(pair, RatFunc(space.places.front()->pi()), 8);
            if (rep.degrees.size() < 2 || rep.degrees[1].dim != 0 ||
                rep.degrees[0].dim != rep.aug_dim)
                throw Error("InternalError",
                            "Laurent cover of the place-set pair is not acyclic");
            break;
        }
    }

    table.h0 = 1;
    table.h0_desc = "Z/p";
    table.h2 = 0;
    if (sections.kind == SectionRing::Kind::Constants) {
        table.h1 = coker_dim(sections, 0).dim;
        table.h1_finite = true;
        table.h1_stable = true;
        table.verdict = "finite";
    } else {
        for (long long N : windows)
            table.h1_truncated.emplace_back(N, coker_dim(sections, N).dim);
        table.h1_stable = true;
        for (size_t i = 1; i < table.h1_truncated.size(); ++i)
            if (table.h1_truncated[i].second != table.h1_truncated[0].second)
                table.h1_stable = false;
        table.h1_finite = table.h1_stable;
        if (table.h1_stable) {
            table.h1 = table.h1_truncated.front().second;
            table.verdict = "finite";
        } else {
            table.h1 = -1;
            table.verdict = "infinite";
        }
    }
    return table;
}

PurityReport purity_check(const SpaceDesc& U, const SpaceDesc& X) {
    if (!U.F || !X.F || U.F->q() != X.F->q())
        throw Error("UnsupportedDescriptor", "purity comparison needs one coefficient field");
    PurityReport rep;
    rep.left = tame_cohomology(U);
    rep.right = tame_cohomology(X);
    if (rep.left.h1_finite && rep.right.h1_finite) {
        rep.equal = rep.left.h0 == rep.right.h0 && rep.left.h1 == rep.right.h1;
    } else if (!rep.left.h1_finite && !rep.right.h1_finite) {
        rep.equal = rep.left.h1_truncated == rep.right.h1_truncated;
    } else {
        rep.equal = false;
    }
    rep.verdict = rep.equal ? "equal" : "unequal";
    if (U.kind == X.kind) {
        rep.note = "identical instances";
    } else if ((U.kind == SpaceKind::GmOverPoint && X.kind == SpaceKind::A1OverPoint) ||
               (U.kind == SpaceKind::A1OverPoint && X.kind == SpaceKind::GmOverPoint)) {
        rep.note = "dense open subspace over the common base point";
    } else if ((U.kind == SpaceKind::A1OverA1 && X.kind == SpaceKind::A1OverP1) ||
               (U.kind == SpaceKind::A1OverP1 && X.kind == SpaceKind::A1OverA1)) {
        rep.note = "control pair: the affine base is not proper, so agreement is not expected";
    } else {
        rep.note = "degreewise comparison of the two instances";
    }
    return rep;
}

HomotopyReportAS homotopy_check(const FqRef& F) {
    if (!F) throw Error("UnsupportedDescriptor", "homotopy comparison needs a field");
    HomotopyReportAS rep;
    rep.galois_h0 = 1;
    rep.galois_h1 = coker_dim(SectionRing::constants(F), 0).dim;
    rep.pipeline = tame_cohomology({F, SpaceKind::A1OverPoint, {}});
    rep.equal = rep.pipeline.h1_finite && rep.pipeline.h0 == rep.galois_h0 &&
                rep.pipeline.h1 == rep.galois_h1;
    rep.verdict = rep.equal ? "equal" : "unequal";
    return rep;
}

}  // namespace tame
