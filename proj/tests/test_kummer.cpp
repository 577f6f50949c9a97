#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "tame/errors.hpp"
#include "tame/grammar.hpp"
#include "tame/kummer.hpp"

using namespace tame;

namespace {

RatFunc rf(const FqRef& F, const std::string& s) { return parse_ratfunc(s, F); }

bool same(const TensorElement& x, const TensorElement& y) { return (x - y).is_zero(); }

KummerRef quadratic_t(const FqRef& F) {
    return KummerAlgebra::make(F, PlaceValuation::finite(Poly::t(F)), {2}, {RatFunc::t(F)});
}

/* Independent valuation of a coefficient at the algebra's base place. */
Rat coef_val(const KummerAlgebra& alg, const RatFunc& a) {
    return valuation_at(a, *alg.base()).exps()[0];
}

TensorElement random_element(const KummerRef& alg, int level, std::mt19937_64& rng, int terms) {
    const FqRef& F = alg->field();
    TensorElement x(alg, level);
    std::uniform_int_distribution<long long> label(0, alg->coset_count() - 1);
    std::uniform_int_distribution<long long> scalar(1, static_cast<long long>(F->q() - 1));
    std::uniform_int_distribution<int> tpow(-2, 2);
    for (int k = 0; k < terms; ++k) {
        std::vector<long long> key(static_cast<size_t>(level));
        for (auto& v : key) v = label(rng);
        RatFunc c = RatFunc::constant(F, static_cast<uint64_t>(scalar(rng))) *
                    ratfunc_pow(RatFunc::t(F), tpow(rng));
        x.add_term(key, c);
    }
    return x;
}

}  // namespace

TEST_CASE("kummer algebra construction and coset tables") {
    auto F = Fq::make(7, 1);
    auto at_t = PlaceValuation::finite(Poly::t(F));
    auto alg = KummerAlgebra::make(F, at_t, {2, 3}, {RatFunc::t(F), rf(F, "t^2")});

    CHECK(alg->gens() == 2);
    CHECK(alg->coset_count() == 6);
    CHECK(alg->zeta_order() == 6);
    CHECK(alg->exponents() == std::vector<long long>{2, 3});

    SUBCASE("labels run through prod Z/m_i with the first radix fastest") {
        CHECK(alg->coset_tuple(0) == std::vector<long long>{0, 0});
        CHECK(alg->coset_tuple(1) == std::vector<long long>{1, 0});
        CHECK(alg->coset_tuple(2) == std::vector<long long>{0, 1});
        CHECK(alg->coset_tuple(3) == std::vector<long long>{1, 1});
        CHECK(alg->coset_tuple(5) == std::vector<long long>{1, 2});
        for (long long label = 0; label < alg->coset_count(); ++label)
            CHECK(alg->coset_label(alg->coset_tuple(label)) == label);
        CHECK_THROWS_WITH_AS(alg->coset_tuple(6), doctest::Contains("IndexOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(alg->coset_tuple(-1), doctest::Contains("IndexOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(alg->coset_label({0}), doctest::Contains("IndexOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(alg->coset_label({2, 0}), doctest::Contains("IndexOutOfRange"), Error);
    }

    SUBCASE("coset values follow sum gamma_i v(alpha_i) / m_i") {
        CHECK(alg->unit_value(0) == Rat(1));
        CHECK(alg->unit_value(1) == Rat(2));
        CHECK(alg->coset_value(0) == Rat(0));
        CHECK(alg->coset_value(1) == Rat(1, 2));
        CHECK(alg->coset_value(2) == Rat(2, 3));
        CHECK(alg->coset_value(3) == Rat(7, 6));
        CHECK(alg->coset_value(5) == Rat(11, 6));
    }

    SUBCASE("lattice coset_index recovers the label tuple") {
        for (long long label = 0; label < alg->coset_count(); ++label) {
            auto idx = coset_index(Value::of(alg->coset_value(label)), alg->lattice());
            auto tup = alg->coset_tuple(label);
            REQUIRE(idx.size() == tup.size());
            for (size_t i = 0; i < idx.size(); ++i) CHECK(idx[i] == tup[i]);
        }
    }

    SUBCASE("descriptor validation") {
        auto t = RatFunc::t(F);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {}, {}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {2, 3}, {t}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {0}, {t}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {7}, {t}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {2}, {RatFunc(F)}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
        CHECK_THROWS_WITH_AS(
            KummerAlgebra::make(F, at_t, {2, 2, 2, 2, 2}, {t, t, t, t, t}),
            doctest::Contains("UnsupportedDescriptor"), Error);
        auto comp = PlaceValuation::composite(PlaceValuation::gauss(F, Rat(0)), at_t);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, comp, {2}, {t}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
        auto F3 = Fq::make(3, 1);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F3, at_t, {2}, {RatFunc::t(F3)}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
        CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {2}, {RatFunc::t(F3)}),
                             doctest::Contains("UnsupportedDescriptor"), Error);
    }
}

TEST_CASE("degenerate presentations are rejected") {
    auto F = Fq::make(7, 1);
    auto at_t = PlaceValuation::finite(Poly::t(F));
    auto t = RatFunc::t(F);

    CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {2}, {rf(F, "t^2")}),
                         doctest::Contains("DegeneratePresentation"), Error);
    CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {2}, {rf(F, "t + 1")}),
                         doctest::Contains("DegeneratePresentation"), Error);
    CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {2, 2}, {t, t}),
                         doctest::Contains("DegeneratePresentation"), Error);
    CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {2, 2}, {t, rf(F, "t^3")}),
                         doctest::Contains("DegeneratePresentation"), Error);
    CHECK_THROWS_WITH_AS(KummerAlgebra::make(F, at_t, {3, 3}, {t, rf(F, "t^2")}),
                         doctest::Contains("DegeneratePresentation"), Error);

    SUBCASE("coprime exponent pairs stay non-degenerate") {
        CHECK(KummerAlgebra::make(F, at_t, {2, 3}, {t, t})->coset_count() == 6);
        auto F13 = Fq::make(13, 1);
        auto t13 = RatFunc::t(F13);
        auto at13 = PlaceValuation::finite(Poly::t(F13));
        CHECK(KummerAlgebra::make(F13, at13, {3, 4}, {t13, t13})->coset_count() == 12);
    }

    SUBCASE("the infinite place is valued by pole order") {
        auto F5 = Fq::make(5, 1);
        auto alg = KummerAlgebra::make(F5, PlaceValuation::infinite(F5), {4}, {RatFunc::t(F5)});
        CHECK(alg->unit_value(0) == Rat(-1));
        CHECK(alg->coset_value(3) == Rat(-3, 4));
    }
}

TEST_CASE("tensor element container semantics") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);

    auto one = TensorElement::unit(alg, 2);
    CHECK(one.level() == 2);
    CHECK(one.coeff({0, 0}) == RatFunc::constant(F, 1));
    CHECK_FALSE(one.is_zero());

    SUBCASE("add_term accumulates and cancels") {
        TensorElement x(alg, 2);
        CHECK(x.is_zero());
        x.add_term({1, 1}, RatFunc::t(F));
        x.add_term({1, 1}, RatFunc::constant(F, 1));
        CHECK(x.coeff({1, 1}) == rf(F, "t + 1"));
        x.add_term({1, 1}, -rf(F, "t + 1"));
        CHECK(x.is_zero());
        x.add_term({0, 1}, RatFunc(F));
        CHECK(x.is_zero());
    }

    SUBCASE("level and key validation") {
        CHECK_THROWS_WITH_AS(TensorElement(alg, 0), doctest::Contains("UnsupportedDescriptor"),
                             Error);
        CHECK_THROWS_WITH_AS(TensorElement(alg, 5), doctest::Contains("UnsupportedDescriptor"),
                             Error);
        TensorElement x(alg, 2);
        CHECK_THROWS_WITH_AS(x.add_term({0}, RatFunc::t(F)),
                             doctest::Contains("IndexOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(x.add_term({0, 2}, RatFunc::t(F)),
                             doctest::Contains("IndexOutOfRange"), Error);
        auto F7 = Fq::make(7, 1);
        CHECK_THROWS_WITH_AS(x.add_term({0, 0}, RatFunc::t(F7)),
                             doctest::Contains("UnsupportedDescriptor"), Error);
    }

    SUBCASE("linear operations") {
        auto x = TensorElement::basis(alg, 2, {1, 0});
        auto y = TensorElement::basis(alg, 2, {0, 1});
        auto s = x + y;
        CHECK(s.coeff({1, 0}) == RatFunc::constant(F, 1));
        CHECK(s.coeff({0, 1}) == RatFunc::constant(F, 1));
        CHECK(same(s - y, x));
        CHECK((x - x).is_zero());
        CHECK(same(x.scaled(RatFunc::constant(F, 2)) + x, TensorElement(alg, 2)));
        CHECK(same(-x, x.scaled(RatFunc::constant(F, 2))));
        CHECK(x.scaled(RatFunc(F)).is_zero());

        TensorElement other(quadratic_t(F), 2);
        CHECK_THROWS_WITH_AS(x + other, doctest::Contains("UnsupportedDescriptor"), Error);
        TensorElement shallow(alg, 1);
        CHECK_THROWS_WITH_AS(x + shallow, doctest::Contains("LevelMismatch"), Error);
    }
}

TEST_CASE("multiplication carries T_i^m_i into the unit") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);
    auto t = RatFunc::t(F);

    auto T_1 = TensorElement::basis(alg, 2, {1, 0});
    auto one_T = TensorElement::basis(alg, 2, {0, 1});
    auto TT = TensorElement::basis(alg, 2, {1, 1});
    auto unit = TensorElement::unit(alg, 2);

    CHECK(same(multiply(T_1, T_1), unit.scaled(t)));
    CHECK(same(multiply(TT, one_T), T_1.scaled(t)));
    CHECK(same(multiply(TT, TT), unit.scaled(t * t)));
    CHECK(same(multiply(T_1, one_T), TT));

    SUBCASE("the unit is neutral and scalars pull out") {
        std::mt19937_64 rng(11);
        for (int k = 0; k < 20; ++k) {
            auto x = random_element(alg, 2, rng, 3);
            CHECK(same(multiply(x, unit), x));
            CHECK(same(multiply(unit, x), x));
            CHECK(same(multiply(x.scaled(t), unit), x.scaled(t)));
        }
    }

    SUBCASE("commutative, associative, distributive on random elements") {
        std::mt19937_64 rng(12);
        for (int k = 0; k < 15; ++k) {
            auto x = random_element(alg, 2, rng, 2);
            auto y = random_element(alg, 2, rng, 2);
            auto z = random_element(alg, 2, rng, 2);
            CHECK(same(multiply(x, y), multiply(y, x)));
            CHECK(same(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
            CHECK(same(multiply(x, y + z), multiply(x, y) + multiply(x, z)));
        }
    }

    SUBCASE("two generators wrap independently") {
        auto F7 = Fq::make(7, 1);
        auto at_t = PlaceValuation::finite(Poly::t(F7));
        auto alg2 = KummerAlgebra::make(F7, at_t, {2, 3}, {RatFunc::t(F7), rf(F7, "t^2")});
        auto T1T2 = TensorElement::basis(alg2, 1, {alg2->coset_label({1, 1})});
        auto sq = multiply(T1T2, T1T2);
        auto expect = TensorElement::basis(alg2, 1, {alg2->coset_label({0, 2})})
                          .scaled(RatFunc::t(F7));
        CHECK(same(sq, expect));
        auto cube = multiply(sq, T1T2);
        auto expect3 = TensorElement::basis(alg2, 1, {alg2->coset_label({1, 0})})
                           .scaled(RatFunc::t(F7) * rf(F7, "t^2"));
        CHECK(same(cube, expect3));
    }
}

TEST_CASE("m_sigma folds twisted slots into the last one") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);
    auto t = RatFunc::t(F);
    auto TT = TensorElement::basis(alg, 2, {1, 1});
    auto unit1 = TensorElement::unit(alg, 1);

    SUBCASE("identity twist multiplies out") {
        auto folded = m_sigma(TT, {{0}});
        CHECK(same(folded, unit1.scaled(t)));
    }

    SUBCASE("sign twist negates the odd slot") {
        auto folded = m_sigma(TT, {{1}});
        CHECK(same(folded, unit1.scaled(-t)));
    }

    SUBCASE("the last slot is never twisted") {
        auto T_1 = TensorElement::basis(alg, 2, {1, 0});
        auto one_T = TensorElement::basis(alg, 2, {0, 1});
        auto T1 = TensorElement::basis(alg, 1, {1});
        CHECK(same(m_sigma(T_1, {{1}}), -T1));
        CHECK(same(m_sigma(one_T, {{1}}), T1));
    }

    SUBCASE("scalars are central") {
        std::mt19937_64 rng(21);
        for (int k = 0; k < 10; ++k) {
            auto x = random_element(alg, 2, rng, 3);
            auto c = rf(F, "t^2 + 1");
            CHECK(same(m_sigma(x.scaled(c), {{1}}), m_sigma(x, {{1}}).scaled(c)));
            auto y = random_element(alg, 2, rng, 3);
            CHECK(same(m_sigma(x + y, {{1}}), m_sigma(x, {{1}}) + m_sigma(y, {{1}})));
        }
    }

    SUBCASE("level three folds two twists") {
        auto TTT = TensorElement::basis(alg, 3, {1, 1, 1});
        CHECK(same(m_sigma(TTT, {{0}, {0}}), TensorElement::basis(alg, 1, {1}).scaled(t)));
        CHECK(same(m_sigma(TTT, {{1}, {0}}), TensorElement::basis(alg, 1, {1}).scaled(-t)));
        CHECK(same(m_sigma(TTT, {{1}, {1}}), TensorElement::basis(alg, 1, {1}).scaled(t)));
    }

    SUBCASE("twist shape is validated") {
        CHECK_THROWS_WITH_AS(m_sigma(TT, {}), doctest::Contains("LevelMismatch"), Error);
        CHECK_THROWS_WITH_AS(m_sigma(TT, {{0}, {0}}), doctest::Contains("LevelMismatch"), Error);
        CHECK_THROWS_WITH_AS(m_sigma(TT, {{0, 0}}), doctest::Contains("LevelMismatch"), Error);
    }
}

TEST_CASE("b_valuation is the exact term minimum") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);

    CHECK(b_valuation(TensorElement(alg, 1)) == Value::zero());
    CHECK(b_valuation(TensorElement::unit(alg, 1)) == Value::of(Rat(0)));
    CHECK(b_valuation(TensorElement::basis(alg, 1, {1})) == Value::of(Rat(1, 2)));
    CHECK(b_valuation(TensorElement::unit(alg, 1).scaled(RatFunc::t(F))) == Value::of(Rat(1)));
    CHECK_THROWS_WITH_AS(b_valuation(TensorElement::unit(alg, 2)),
                         doctest::Contains("LevelMismatch"), Error);

    SUBCASE("distinct coset values forbid cancellation") {
        std::mt19937_64 rng(31);
        for (int k = 0; k < 40; ++k) {
            auto x = random_element(alg, 1, rng, 3);
            if (x.is_zero()) continue;
            Rat expect;
            bool first = true;
            for (const auto& [key, a] : x.coeffs()) {
                Rat v = coef_val(*alg, a) + alg->coset_value(key[0]);
                if (first || v < expect) expect = v;
                first = false;
            }
            CHECK(b_valuation(x) == Value::of(expect));
        }
    }
}

TEST_CASE("sup_value ranges over every twist component") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);
    auto t = RatFunc::t(F);
    auto unit = TensorElement::unit(alg, 2);
    auto TT = TensorElement::basis(alg, 2, {1, 1});

    CHECK(sup_value(TT) == Value::of(Rat(1)));
    CHECK(sup_value(unit.scaled(t)) == Value::of(Rat(1)));
    CHECK(sup_value(unit) == Value::of(Rat(0)));

    SUBCASE("a component may vanish without dropping the sup") {
        auto x = unit + TT.scaled(t.inv());
        CHECK(sup_value(x) == Value::of(Rat(0)));
        CHECK(b_valuation(m_sigma(x, {{1}})) == Value::zero());
    }

    SUBCASE("zero has no sup") {
        CHECK_THROWS_WITH_AS(sup_value(TensorElement(alg, 2)),
                             doctest::Contains("UnsupportedDescriptor"), Error);
    }

    SUBCASE("submultiplicative, with equality on pure tensors") {
        std::mt19937_64 rng(41);
        for (int k = 0; k < 25; ++k) {
            auto x = random_element(alg, 2, rng, 2);
            auto y = random_element(alg, 2, rng, 2);
            if (x.is_zero() || y.is_zero()) continue;
            auto xy = multiply(x, y);
            if (xy.is_zero()) continue;
            Rat sx = sup_value(x).exps()[0];
            Rat sy = sup_value(y).exps()[0];
            Rat sxy = sup_value(xy).exps()[0];
            bool submult = sxy >= sx + sy;
            CHECK(submult);
        }
        for (int k = 0; k < 25; ++k) {
            std::uniform_int_distribution<long long> label(0, 1);
            auto x = TensorElement::basis(alg, 2, {label(rng), label(rng)});
            auto y = TensorElement::basis(alg, 2, {label(rng), label(rng)});
            Rat sum = sup_value(x).exps()[0] + sup_value(y).exps()[0];
            CHECK(sup_value(multiply(x, y)).exps()[0] == sum);
        }
    }
}

TEST_CASE("integrality thresholds match the splitting oracle") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);
    auto t = RatFunc::t(F);
    auto unit = TensorElement::unit(alg, 2);
    auto TT = TensorElement::basis(alg, 2, {1, 1});
    auto T_1 = TensorElement::basis(alg, 2, {1, 0});

    CHECK(is_integral(TT.scaled(t.inv())));
    CHECK(is_integral_oracle(TT.scaled(t.inv())));
    CHECK_FALSE(is_integral(T_1.scaled(t.inv())));
    CHECK_FALSE(is_integral_oracle(T_1.scaled(t.inv())));
    CHECK(is_integral(unit));
    CHECK(is_integral(TensorElement(alg, 2)));
    CHECK_FALSE(is_integral(unit.scaled(t.inv())));

    SUBCASE("agreement across configurations") {
        auto F7 = Fq::make(7, 1);
        auto F5 = Fq::make(5, 1);
        std::vector<std::pair<KummerRef, int>> configs = {
            {alg, 2},
            {alg, 3},
            {KummerAlgebra::make(F7, PlaceValuation::finite(Poly::t(F7)), {3},
                                 {rf(F7, "t^2")}),
             2},
            {KummerAlgebra::make(F7, PlaceValuation::finite(Poly::t(F7)), {2, 3},
                                 {RatFunc::t(F7), rf(F7, "t^2")}),
             2},
            {KummerAlgebra::make(F5, PlaceValuation::infinite(F5), {4}, {RatFunc::t(F5)}), 2},
        };
        std::mt19937_64 rng(51);
        for (const auto& [a, level] : configs) {
            for (int k = 0; k < 120; ++k) {
                auto x = random_element(a, level, rng, 3);
                CHECK(is_integral(x) == is_integral_oracle(x));
                if (!x.is_zero())
                    CHECK(is_integral(x) == mult_le_one(sup_value(x)));
            }
        }
    }

    SUBCASE("integral elements form a ring") {
        std::mt19937_64 rng(52);
        int seen = 0;
        while (seen < 30) {
            auto x = random_element(alg, 2, rng, 3);
            auto y = random_element(alg, 2, rng, 3);
            if (!is_integral(x) || !is_integral(y)) continue;
            ++seen;
            CHECK(is_integral(x + y));
            CHECK(is_integral(multiply(x, y)));
        }
    }
}

TEST_CASE("minimal polynomials by exact linear algebra") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);
    auto t = RatFunc::t(F);
    auto one = RatFunc::constant(F, 1);

    SUBCASE("frozen spec instances") {
        auto TT = TensorElement::basis(alg, 2, {1, 1});
        auto mp = minimal_polynomial(TT.scaled(t.inv()));
        REQUIRE(mp.size() == 3);
        CHECK(mp[0] == -one);
        CHECK(mp[1].is_zero());
        CHECK(mp[2] == one);

        auto T_1 = TensorElement::basis(alg, 2, {1, 0});
        mp = minimal_polynomial(T_1.scaled(t.inv()));
        REQUIRE(mp.size() == 3);
        CHECK(mp[0] == -t.inv());
        CHECK(mp[1].is_zero());
        CHECK(mp[2] == one);

        mp = minimal_polynomial(TensorElement::unit(alg, 2));
        REQUIRE(mp.size() == 2);
        CHECK(mp[0] == -one);
        CHECK(mp[1] == one);

        mp = minimal_polynomial(TensorElement::basis(alg, 1, {1}));
        REQUIRE(mp.size() == 3);
        CHECK(mp[0] == -t);
        CHECK(mp[1].is_zero());
        CHECK(mp[2] == one);

        mp = minimal_polynomial(TensorElement(alg, 1));
        REQUIRE(mp.size() == 2);
        CHECK(mp[0].is_zero());
        CHECK(mp[1] == one);
    }

    SUBCASE("the returned polynomial annihilates its element") {
        std::mt19937_64 rng(61);
        for (int k = 0; k < 12; ++k) {
            auto x = random_element(alg, 2, rng, 2);
            auto mp = minimal_polynomial(x);
            REQUIRE(mp.size() >= 2);
            CHECK(mp.back() == one);
            auto acc = TensorElement(alg, 2);
            for (size_t i = mp.size(); i-- > 0;) {
                acc = multiply(acc, x);
                if (!mp[i].is_zero())
                    acc = acc + TensorElement::unit(alg, 2).scaled(mp[i]);
            }
            CHECK(acc.is_zero());
        }
    }

    SUBCASE("integrality matches integral minimal polynomial coefficients") {
        std::mt19937_64 rng(62);
        for (int k = 0; k < 25; ++k) {
            auto x = random_element(alg, 2, rng, 2);
            auto mp = minimal_polynomial(x);
            bool coeffs_integral = true;
            for (const auto& c : mp)
                if (!c.is_zero() && coef_val(*alg, c) < Rat(0)) coeffs_integral = false;
            CHECK(is_integral(x) == coeffs_integral);
        }
    }

    SUBCASE("the coset basis cap is enforced") {
        auto F11 = Fq::make(11, 1);
        auto big = KummerAlgebra::make(F11, PlaceValuation::finite(Poly::t(F11)), {5},
                                       {RatFunc::t(F11)});
        auto mp = minimal_polynomial(TensorElement::basis(big, 2, {1, 0}));
        REQUIRE(mp.size() == 6);
        CHECK(mp[0] == -RatFunc::t(F11));
        CHECK(mp[3].is_zero());
        CHECK(mp[5] == RatFunc::constant(F11, 1));
        CHECK_THROWS_WITH_AS(minimal_polynomial(TensorElement::unit(big, 3)),
                             doctest::Contains("UnsupportedDescriptor"), Error);
    }
}

TEST_CASE("vandermonde character matrices invert exactly") {
    SUBCASE("frozen order two instance") {
        auto F = Fq::make(3, 1);
        auto V = vandermonde(F, 2, 2);
        CHECK(V.size == 2);
        CHECK(V.V == std::vector<std::vector<uint64_t>>{{1, 1}, {1, 2}});
        CHECK(V.Vinv == std::vector<std::vector<uint64_t>>{{2, 2}, {2, 1}});
    }

    SUBCASE("level one is the singleton identity") {
        auto F = Fq::make(7, 1);
        auto V = vandermonde(F, 3, 1);
        CHECK(V.size == 1);
        CHECK(V.V == std::vector<std::vector<uint64_t>>{{1}});
        CHECK(V.Vinv == std::vector<std::vector<uint64_t>>{{1}});
    }

    SUBCASE("V times Vinv is the identity") {
        struct Probe {
            long long p;
            long long m;
            int n;
        };
        std::vector<Probe> probes = {{7, 2, 2}, {7, 3, 2}, {13, 4, 2},
                                     {11, 5, 2}, {7, 2, 3}, {7, 3, 3}};
        for (const auto& pr : probes) {
            auto F = Fq::make(pr.p, 1);
            auto V = vandermonde(F, pr.m, pr.n);
            size_t N = static_cast<size_t>(V.size);
            for (size_t i = 0; i < N; ++i)
                for (size_t j = 0; j < N; ++j) {
                    uint64_t s = 0;
                    for (size_t k = 0; k < N; ++k)
                        s = F->add(s, F->mul(V.V[i][k], V.Vinv[k][j]));
                    CHECK(s == (i == j ? 1u : 0u));
                }
        }
    }

    SUBCASE("missing roots of unity are reported") {
        auto F2 = Fq::make(2, 1);
        CHECK_THROWS_WITH_AS(vandermonde(F2, 3, 2),
                             doctest::Contains("RootOfUnityUnavailable"), Error);
        auto F7 = Fq::make(7, 1);
        CHECK_THROWS_WITH_AS(vandermonde(F7, 4, 2),
                             doctest::Contains("RootOfUnityUnavailable"), Error);
        CHECK_THROWS_WITH_AS(vandermonde(F7, 2, 0),
                             doctest::Contains("UnsupportedDescriptor"), Error);
    }
}

TEST_CASE("coefficient section and slot filters") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);
    auto t = RatFunc::t(F);

    TensorElement x(alg, 2);
    x.add_term({0, 0}, t);
    x.add_term({0, 1}, RatFunc::constant(F, 2));
    x.add_term({1, 0}, t.inv());
    x.add_term({1, 1}, RatFunc::constant(F, 1));

    CHECK(phi(x) == t);
    CHECK(phi(TensorElement(alg, 2)).is_zero());

    SUBCASE("homotopy_D keeps keys with trivial leading cosets") {
        auto d1 = homotopy_D(1, x);
        CHECK(same(d1, x));
        auto d2 = homotopy_D(2, x);
        TensorElement expect(alg, 2);
        expect.add_term({0, 0}, t);
        expect.add_term({0, 1}, RatFunc::constant(F, 2));
        CHECK(same(d2, expect));
        CHECK_THROWS_WITH_AS(homotopy_D(0, x), doctest::Contains("IndexOutOfRange"), Error);
        CHECK_THROWS_WITH_AS(homotopy_D(3, x), doctest::Contains("IndexOutOfRange"), Error);
    }

    SUBCASE("filters preserve integrality") {
        std::mt19937_64 rng(71);
        for (int k = 0; k < 30; ++k) {
            auto y = random_element(alg, 2, rng, 3);
            if (!is_integral(y)) continue;
            CHECK(is_integral(homotopy_D(2, y)));
            auto c = phi(y);
            if (!c.is_zero()) CHECK(coef_val(*alg, c) >= Rat(0));
        }
    }
}

TEST_CASE("kummer descriptor grammar") {
    auto F = Fq::make(7, 1);
    auto at_t = PlaceValuation::finite(Poly::t(F));

    auto alg = parse_kummer("m=2,3:alpha=t,t^2", F, at_t);
    CHECK(alg->exponents() == std::vector<long long>{2, 3});
    CHECK(alg->units()[1] == rf(F, "t^2"));
    CHECK(kummer_str(*alg) == "m=2,3:alpha=t,t^2");
    CHECK(kummer_str(*parse_kummer(kummer_str(*alg), F, at_t)) == kummer_str(*alg));

    CHECK_THROWS_WITH_AS(parse_kummer("m=2", F, at_t), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(parse_kummer("n=2:alpha=t", F, at_t), doctest::Contains("ParseError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_kummer("m=2:beta=t", F, at_t), doctest::Contains("ParseError"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_kummer("m=x:alpha=t", F, at_t), doctest::Contains("ParseError"),
                         Error);
}

TEST_CASE("tensor element grammar round trips") {
    auto F = Fq::make(3, 1);
    auto alg = quadratic_t(F);

    SUBCASE("printing normal forms") {
        auto TT = TensorElement::basis(alg, 2, {1, 1});
        CHECK(tensor_element_str(TT) == "T1(x)T1");
        CHECK(tensor_element_str(TT.scaled(RatFunc::t(F).inv())) == "1/t * T1(x)T1");
        CHECK(tensor_element_str(TensorElement(alg, 2)) == "0");
        CHECK(tensor_element_str(TensorElement::unit(alg, 2)) == "1(x)1");
        auto mixed = TensorElement::basis(alg, 2, {0, 1}).scaled(rf(F, "t + 1")) +
                     TensorElement::unit(alg, 2).scaled(RatFunc::t(F));
        CHECK(tensor_element_str(mixed) == "t * 1(x)1 + (t + 1) * 1(x)T1");
    }

    SUBCASE("parsing accepts the printed forms and variants") {
        auto TT = TensorElement::basis(alg, 2, {1, 1});
        CHECK(same(parse_tensor_element("T1(x)T1", alg, 2), TT));
        CHECK(same(parse_tensor_element("t^-1 * T1(x)T1", alg, 2),
                   TT.scaled(RatFunc::t(F).inv())));
        CHECK(same(parse_tensor_element("1/t * T1(x)T1", alg, 2),
                   TT.scaled(RatFunc::t(F).inv())));
        CHECK(same(parse_tensor_element("0", alg, 2), TensorElement(alg, 2)));
        CHECK(same(parse_tensor_element("(t + 1)", alg, 2),
                   TensorElement::unit(alg, 2).scaled(rf(F, "t + 1"))));
        CHECK(same(parse_tensor_element("2", alg, 1),
                   TensorElement::unit(alg, 1).scaled(RatFunc::constant(F, 2))));
        CHECK(same(parse_tensor_element("(t + 1) * 1(x)T1 + t * 1(x)1", alg, 2),
                   TensorElement::basis(alg, 2, {0, 1}).scaled(rf(F, "t + 1")) +
                       TensorElement::unit(alg, 2).scaled(RatFunc::t(F))));
        CHECK(same(parse_tensor_element("T1(x)T1 + 2 * T1(x)T1", alg, 2), TensorElement(alg, 2)));
    }

    SUBCASE("str then parse is the identity on random elements") {
        std::mt19937_64 rng(81);
        auto F7 = Fq::make(7, 1);
        auto at7 = PlaceValuation::finite(Poly::t(F7));
        auto alg2 = KummerAlgebra::make(F7, at7, {2, 3}, {RatFunc::t(F7), rf(F7, "t^2")});
        for (int k = 0; k < 30; ++k) {
            auto x = random_element(alg2, 2, rng, 3);
            auto back = parse_tensor_element(tensor_element_str(x), alg2, 2);
            CHECK(same(back, x));
            CHECK(tensor_element_str(back) == tensor_element_str(x));
        }
    }

    SUBCASE("multi generator slots print exponents") {
        auto F7 = Fq::make(7, 1);
        auto at7 = PlaceValuation::finite(Poly::t(F7));
        auto alg2 = KummerAlgebra::make(F7, at7, {2, 3}, {RatFunc::t(F7), rf(F7, "t^2")});
        auto x = TensorElement::basis(alg2, 2, {alg2->coset_label({1, 2}), 0});
        CHECK(tensor_element_str(x) == "T1T2^2(x)1");
        CHECK(same(parse_tensor_element("T1T2^2(x)1", alg2, 2), x));
        CHECK(same(parse_tensor_element("T2^2T1(x)1", alg2, 2), x));
    }

    SUBCASE("malformed elements are rejected") {
        CHECK_THROWS_WITH_AS(parse_tensor_element("", alg, 2), doctest::Contains("ParseError"),
                             Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("T1", alg, 2), doctest::Contains("ParseError"),
                             Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("T1(x)T1(x)T1", alg, 2),
                             doctest::Contains("ParseError"), Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("T2(x)1", alg, 2),
                             doctest::Contains("ParseError"), Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("T1^0(x)1", alg, 2),
                             doctest::Contains("ParseError"), Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("T1^2(x)1", alg, 2),
                             doctest::Contains("ParseError"), Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("T1T1(x)1", alg, 2),
                             doctest::Contains("ParseError"), Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("t + + 1", alg, 2),
                             doctest::Contains("ParseError"), Error);
        CHECK_THROWS_WITH_AS(parse_tensor_element("(t + 1 * 1(x)1", alg, 2),
                             doctest::Contains("ParseError"), Error);
    }
}
