#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tame/errors.hpp"
#include "tame/grammar.hpp"
#include "tame/huber.hpp"

using namespace tame;

namespace {

RatFunc rand_ratfunc(const FqRef& F, int maxdeg, std::mt19937_64& rng) {
    auto rand_poly = [&](int cap) {
        std::vector<uint64_t> c(rng() % static_cast<uint64_t>(cap + 2));
        for (auto& v : c) v = rng() % F->q();
        return Poly(F, c);
    };
    Poly num = rand_poly(maxdeg);
    Poly den(F);
    do {
        den = rand_poly(maxdeg);
    } while (den.is_zero());
    return RatFunc(num, den);
}

}  // namespace

TEST_CASE("membership for place-set pairs") {
    auto F = Fq::prime(5);
    Poly t = Poly::t(F);
    auto pair = HuberPairDesc::field_with_places(F, {PlaceValuation::finite(t)});
    CHECK(in_plus(RatFunc(Poly::constant(F, 1), t + Poly::constant(F, 1)), pair));
    CHECK_FALSE(in_plus(RatFunc(Poly::constant(F, 1), t), pair));
    CHECK(in_plus(RatFunc(t), pair));
}

TEST_CASE("membership for integral closures of images") {
    auto F = Fq::prime(5);
    Poly t = Poly::t(F);
    auto consts = HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {});
    CHECK_FALSE(in_plus(RatFunc(t), consts));
    CHECK(in_plus(RatFunc(Poly::constant(F, 3)), consts));

    /* Closure of F_q[t^2] in F_q[t] is all of F_q[t]. */
    auto sub = HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {RatFunc(t * t)});
    CHECK(in_plus(RatFunc(t), sub));
    CHECK(in_plus(RatFunc(t * t * t), sub));

    /* In the Laurent ring, 1/t is not integral over F_q[t]. */
    auto lau = HuberPairDesc::with_closure(F, RingKind::LaurentLoc, t, {RatFunc(t)});
    CHECK(in_plus(RatFunc(t), lau));
    CHECK_FALSE(in_plus(RatFunc(Poly::constant(F, 1), t), lau));
    CHECK_THROWS_AS(in_plus(RatFunc(Poly::constant(F, 1), t + Poly::constant(F, 1)), lau), Error);
}

TEST_CASE("plus is a root-closed subring") {
    auto F = Fq::prime(3);
    Poly t = Poly::t(F);
    auto pair = HuberPairDesc::field_with_places(
        F, {PlaceValuation::finite(t), PlaceValuation::infinite(F)});
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
        RatFunc a = rand_ratfunc(F, 4, rng);
        RatFunc b = rand_ratfunc(F, 4, rng);
        if (in_plus(a, pair) && in_plus(b, pair)) {
            CHECK(in_plus(a + b, pair));
            CHECK(in_plus(a * b, pair));
        }
        /* Root closure: f^n integral iff f integral (monic witness X^n - f^n). */
        if (!a.is_zero()) {
            int n = 2 + static_cast<int>(rng() % 3);
            CHECK(in_plus(ratfunc_pow(a, n), pair) == in_plus(a, pair));
        }
    }
}

TEST_CASE("rational subsets filter the place set") {
    auto F = Fq::prime(3);
    Poly t = Poly::t(F);
    Poly t1 = t - Poly::constant(F, 1);
    auto pt = PlaceValuation::finite(t);
    auto pt1 = PlaceValuation::finite(t1);
    auto pair = HuberPairDesc::field_with_places(F, {pt, pt1});

    RatFunc f(t1, t);
    auto rs = rational_subset(pair, f);
    REQUIRE(rs.plus.places.size() == 1);
    CHECK(*rs.plus.places[0] == *pt1);
    REQUIRE(rs.minus.places.size() == 1);
    CHECK(*rs.minus.places[0] == *pt);
    CHECK(rs.both.places.empty());
    /* Empty place set denotes the whole field. */
    CHECK(in_plus(RatFunc(Poly::constant(F, 1), t * t1), rs.both));

    auto single = HuberPairDesc::field_with_places(F, {pt});
    auto rs2 = rational_subset(single, RatFunc(t));
    CHECK(rs2.plus.places.size() == 1);
    CHECK(rs2.minus.places.empty());

    auto inf = PlaceValuation::infinite(F);
    auto pair3 = HuberPairDesc::field_with_places(F, {pt, inf});
    /* Unit at both places: every returned pair equals the input. */
    RatFunc u2(t + Poly::constant(F, 1), t + Poly::constant(F, 2));
    auto rs3 = rational_subset(pair3, u2);
    CHECK(rs3.plus.places.size() == 2);
    CHECK(rs3.minus.places.size() == 2);
    CHECK(rs3.both.places.size() == 2);
}

TEST_CASE("membership in a rational subset extension") {
    /* S = {t, t-1}, f = (t-1)/t: A+[f] should be exactly O_{t-1}. */
    auto F = Fq::prime(3);
    Poly t = Poly::t(F);
    Poly t1 = t - Poly::constant(F, 1);
    auto pair = HuberPairDesc::field_with_places(
        F, {PlaceValuation::finite(t), PlaceValuation::finite(t1)});
    auto rs = rational_subset(pair, RatFunc(t1, t));
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        RatFunc g = rand_ratfunc(F, 4, rng);
        bool expected = g.is_zero() || g.num().ord_at(t1) - g.den().ord_at(t1) >= 0;
        CHECK(in_plus(g, rs.plus) == expected);
    }
}

TEST_CASE("point classification") {
    auto F = Fq::prime(3);
    Poly t = Poly::t(F);
    auto consts = HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {});
    auto whole = HuberPairDesc::with_closure(F, RingKind::Poly, Poly(F), {RatFunc(t)});

    auto c1 = classify_point(PlaceValuation::finite(t), consts);
    CHECK(c1.member);
    CHECK(c1.type == "classical");

    auto c2 = classify_point(PlaceValuation::infinite(F), consts);
    CHECK(c2.member);
    CHECK(c2.type == "at-infinity");

    auto c3 = classify_point(PlaceValuation::infinite(F), whole);
    CHECK_FALSE(c3.member);
    REQUIRE(c3.has_witness);
    CHECK(c3.witness == RatFunc(t));
    CHECK_FALSE(mult_le_one(valuation_at(c3.witness, *PlaceValuation::infinite(F))));

    CHECK(classify_point(PlaceValuation::gauss(F, Rat(1, 2)), whole).member);
    CHECK(classify_point(PlaceValuation::gauss(F, Rat(1, 2)), whole).type == "Gauss");
    CHECK(classify_point(PlaceValuation::trivial(F), whole).type == "trivial");
    CHECK(classify_point(PlaceValuation::trivial(F), whole).member);
    auto comp = PlaceValuation::composite(PlaceValuation::trivial(F), PlaceValuation::finite(t));
    CHECK(classify_point(comp, whole).type == "rank-2");
    CHECK(classify_point(comp, whole).member);
}

TEST_CASE("point classification over place sets and witnesses") {
    auto F = Fq::prime(3);
    Poly t = Poly::t(F);
    auto pt = PlaceValuation::finite(t);
    auto pair = HuberPairDesc::field_with_places(F, {pt});

    CHECK(classify_point(pt, pair).member);
    auto miss = classify_point(PlaceValuation::finite(t - Poly::constant(F, 1)), pair);
    CHECK_FALSE(miss.member);
    REQUIRE(miss.has_witness);
    CHECK(in_plus(miss.witness, pair));
    CHECK_FALSE(mult_le_one(valuation_at(miss.witness, *PlaceValuation::finite(t - Poly::constant(F, 1)))));

    auto missinf = classify_point(PlaceValuation::infinite(F), pair);
    CHECK_FALSE(missinf.member);
    CHECK(in_plus(missinf.witness, pair));

    /* Gauss points sit over the t-place; composite over trivial passes through. */
    CHECK(classify_point(PlaceValuation::gauss(F, Rat(1, 2)), pair).member);
    CHECK(classify_point(PlaceValuation::gauss(F, Rat(0)), pair).member);
    CHECK_FALSE(classify_point(PlaceValuation::gauss(F, Rat(-1)), pair).member);
    auto comp = PlaceValuation::composite(PlaceValuation::trivial(F), pt);
    CHECK(classify_point(comp, pair).member);
}

TEST_CASE("laurent cover captures every derived point") {
    auto F = Fq::prime(5);
    Poly t = Poly::t(F);
    auto pt = PlaceValuation::finite(t);
    auto pt2 = PlaceValuation::finite(t - Poly::constant(F, 2));
    auto inf = PlaceValuation::infinite(F);
    auto pair = HuberPairDesc::field_with_places(F, {pt, pt2, inf});

    std::vector<PlaceRef> points = {pt, pt2, inf,
                                    PlaceValuation::gauss(F, Rat(1)),
                                    PlaceValuation::trivial(F),
                                    PlaceValuation::composite(PlaceValuation::trivial(F), pt2)};
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        RatFunc f = rand_ratfunc(F, 3, rng);
        if (f.is_zero()) continue;
        auto rs = rational_subset(pair, f);
        for (const auto& x : points) {
            if (!classify_point(x, pair).member) continue;
            bool covered = classify_point(x, rs.plus).member || classify_point(x, rs.minus).member;
            CHECK(covered);
        }
    }
}

TEST_CASE("field grammar") {
    CHECK(parse_field("GF(9)")->q() == 9);
    CHECK(parse_field("GF(2)")->q() == 2);
    CHECK(field_str(parse_field("GF(16)")) == "GF(16)");
    CHECK_THROWS_AS(parse_field("GF(6)"), Error);
    CHECK_THROWS_AS(parse_field("GF(1)"), Error);
}

TEST_CASE("polynomial grammar round trip") {
    auto F3 = Fq::prime(3);
    for (const char* s : {"t^3 + 2*t + 1", "t", "0", "1", "2*t^2", "t^2 + t", "t + 2"}) {
        CHECK(poly_str(parse_poly(s, F3)) == s);
    }
    CHECK(poly_str(parse_poly("t-1", F3)) == "t + 2");
    CHECK(poly_str(parse_poly("t*t + 4", F3)) == "t^2 + 1");
    auto F4 = Fq::make(2, 2);
    CHECK(poly_str(parse_poly("(u+1)*t^2 + u", F4)) == "(u+1)*t^2 + u");
    CHECK(poly_str(parse_poly("u^2*t", F4)) == "(u+1)*t");
    std::mt19937_64 rng(14);
    for (const auto& F : {Fq::prime(2), Fq::prime(7), Fq::make(3, 2)}) {
        for (int i = 0; i < 80; ++i) {
            std::vector<uint64_t> c(rng() % 6);
            for (auto& v : c) v = rng() % F->q();
            Poly f(F, c);
            CHECK(parse_poly(poly_str(f), F) == f);
        }
    }
}

TEST_CASE("ratfunc grammar round trip") {
    auto F = Fq::prime(5);
    for (const char* s : {"1/t", "(t + 1)/t", "(t^2 + 1)/(t^2 + t)", "t^2 + 2", "4/(t + 3)"}) {
        CHECK(ratfunc_str(parse_ratfunc(s, F)) == s);
    }
    CHECK(ratfunc_str(parse_ratfunc("t^-1", F)) == "1/t");
    CHECK(ratfunc_str(parse_ratfunc("t^-2 * (t+1)", F)) == "(t + 1)/t^2");
    CHECK(ratfunc_str(parse_ratfunc("-t", F)) == "4*t");
    std::mt19937_64 rng(15);
    for (int i = 0; i < 120; ++i) {
        RatFunc f = rand_ratfunc(F, 5, rng);
        CHECK(parse_ratfunc(ratfunc_str(f), F) == f);
    }
}

TEST_CASE("place grammar round trip") {
    auto F = Fq::prime(3);
    for (const char* s : {"t", "t + 2", "inf", "gauss(1/2)", "gauss(-2)", "trivial", "inf;t", "trivial;t^2 + 1", "trivial;trivial;inf"}) {
        CHECK(place_str(*parse_place(s, F)) == s);
    }
    CHECK(place_str(*parse_place("t-1", F)) == "t + 2");
    CHECK(parse_place("inf;t", F)->rank() == 2);
    CHECK_THROWS_AS(parse_place("t^2 + 2", F), Error);  // reducible
    CHECK_THROWS_AS(parse_place("1/t", F), Error);
}

TEST_CASE("pair grammar round trip") {
    for (const char* s : {"pair(field=GF(4)(t), places=[t,t + 1])",
                          "pair(ring=GF(2)[t], plus=const)",
                          "pair(ring=GF(3)[t,1/t], plus=closure[t,1/t])",
                          "pair(field=GF(5)(t), places=[t,inf])",
                          "pair(ring=GF(9)[t], plus=closure[t^2])"}) {
        CHECK(pair_str(parse_pair(s)) == s);
    }
    auto d = parse_pair("pair(field=GF(4)(t), places=[t,t-1])");
    CHECK(d.plus == PlusKind::PlaceSet);
    CHECK(d.places.size() == 2);
    CHECK(pair_str(d) == "pair(field=GF(4)(t), places=[t,t + 1])");
    CHECK_THROWS_AS(parse_pair("pair(ring=GF(4)[t], places=[t])"), Error);
    CHECK_THROWS_AS(parse_pair("pair(field=GF(4)(t), places=[])"), Error);
}

TEST_CASE("value grammar round trip") {
    for (const char* s : {"v=0", "v=(1/2)", "v=(-2, 1/3)", "v=(0, 0, 5)"}) {
        CHECK(value_str(parse_value(s)) == s);
    }
    CHECK(parse_value("v=(1, 2)").rank() == 2);
    CHECK_THROWS_AS(parse_value("v=(1, 2, 3, 4)"), Error);
    CHECK_THROWS_AS(parse_value("w=(1)"), Error);
}
