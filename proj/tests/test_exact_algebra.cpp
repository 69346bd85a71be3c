#include <gtest/gtest.h>

#include <random>

#include "lfac/split_rational.hpp"

using namespace lfac;

namespace {

Scalar sym(const char* n) { return Scalar::symbol(n); }
const Scalar a = sym("a"), b = sym("b"), c = sym("c"), v = sym("v");

}  // namespace

TEST(Scalar, DefiningRelationOfV) {
    EXPECT_EQ(v * v, Scalar::sqrt_q_power(2));
    EXPECT_EQ(v.pow(-3), Scalar::sqrt_q_power(-3));
}

TEST(Scalar, PolynomialCancellation) {
    EXPECT_EQ((a * a - b * b) / (a - b), a + b);
    EXPECT_EQ(a / a, Scalar(1));
    EXPECT_TRUE((a / a).is_one());
}

TEST(Scalar, CanonicalFormIsUnique) {
    // Same value reached through different expressions.
    Scalar x = (a + b) / (a * a - b * b);
    Scalar y = Scalar(1) / (a - b);
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.denominator().leading_coeff(), 1);
    // Scaled denominators normalize to monic.
    EXPECT_EQ(Scalar(1) / (Scalar(2) * a - Scalar(2) * b), Scalar(Rational(1, 2)) / (a - b));
}

TEST(Scalar, MultivariateGcdWithSharedFactor) {
    Scalar p = (a + b * c) * (a - Scalar(3) * v) * (b + Scalar(1));
    Scalar q = (a + b * c) * (b - a) * v;
    Scalar r = p / q;
    EXPECT_EQ(r, (a - Scalar(3) * v) * (b + Scalar(1)) / ((b - a) * v));
    EXPECT_EQ(r * q, p);
}

TEST(Scalar, DivisionByZeroThrows) {
    EXPECT_THROW(a / (b - b), DivisionByZero);
    EXPECT_THROW(Scalar().inverse(), DivisionByZero);
}

TEST(Scalar, CanonicalizeIsIdempotent) {
    Scalar x = (a * a - Scalar(1)) / (a * v + v);
    EXPECT_EQ(Scalar::fraction(x.numerator(), x.denominator()), x);
}

TEST(Scalar, Substitution) {
    Scalar x = (a + b) / v;
    EXPECT_EQ(x.substitute({{"a", b}}), Scalar(2) * b / v);
    EXPECT_EQ(x.evaluate({{"a", 1}, {"b", 2}, {"v", 3}}), Rational(1));
}

TEST(Scalar, RandomFieldAxiomsAgreeWithEvaluation) {
    std::mt19937_64 rng(11);
    auto rnd_small = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    std::vector<Scalar> atoms = {a, b, c, v, Scalar(2), Scalar(Rational(-1, 3))};
    auto rnd_scalar = [&] {
        Scalar s = atoms[rng() % atoms.size()];
        for (int k = rnd_small(0, 3); k > 0; --k) {
            Scalar t = atoms[rng() % atoms.size()];
            switch (rng() % 3) {
                case 0: s = s + t; break;
                case 1: s = s * t; break;
                default: s = s - t * t; break;
            }
        }
        return s;
    };
    std::map<std::string, Rational> at = {{"a", Rational(3, 7)}, {"b", Rational(-5, 2)}, {"c", 11}, {"v", Rational(13, 5)}};
    for (int trial = 0; trial < 200; ++trial) {
        Scalar x = rnd_scalar(), y = rnd_scalar(), z = rnd_scalar();
        if (y.is_zero() || z.is_zero()) continue;
        Scalar e = (x + y) / z - x / z;
        EXPECT_EQ(e, y / z);
        EXPECT_EQ(e.evaluate(at), (y / z).evaluate(at));
        EXPECT_EQ(x * y / y, x);
    }
}

TEST(SplitRational, MergeDistinctRoots) {
    auto f = SplitRational::euler(a) * SplitRational::euler(b);
    ASSERT_EQ(f.factors().size(), 2u);
    EXPECT_EQ(f.factors()[0], (Factor{a, -1}));
    EXPECT_EQ(f.factors()[1], (Factor{b, -1}));
    EXPECT_TRUE(f.is_lfactor());
}

TEST(SplitRational, DivideBySelfIsOne) {
    auto f = SplitRational::euler(a);
    EXPECT_TRUE((f / f).is_one());
}

TEST(SplitRational, CancelCommonFactor) {
    const Scalar aq = a * Scalar::sqrt_q_power(-2);
    auto f = SplitRational::euler(a) * SplitRational::euler(aq);
    EXPECT_EQ(f / SplitRational::euler(aq), SplitRational::euler(a));
}

TEST(SplitRational, Shift) {
    auto f = SplitRational::euler(a);
    EXPECT_EQ(f.shift(HalfInt::whole(1)), SplitRational::euler(a * Scalar::sqrt_q_power(-2)));
    EXPECT_EQ(f.shift(HalfInt::halves(1)), SplitRational::euler(a * Scalar::sqrt_q_power(-1)));
    EXPECT_EQ(f.shift(HalfInt{}), f);
    // X-powers move into the unit.
    auto g = SplitRational::x_power(2) * f;
    EXPECT_EQ(g.shift(HalfInt::whole(1)).unit(), Scalar::sqrt_q_power(-4));
}

TEST(SplitRational, ShiftComposes) {
    auto f = SplitRational::euler(a) * SplitRational::linear(b, 2) * SplitRational::x_power(-1) *
             SplitRational::constant(c);
    for (int t = -3; t <= 3; ++t)
        for (int u = -3; u <= 3; ++u)
            EXPECT_EQ(f.shift(HalfInt::halves(t)).shift(HalfInt::halves(u)), f.shift(HalfInt::halves(t + u)));
}

TEST(SplitRational, VanishingOrder) {
    EXPECT_EQ(SplitRational::euler(a).vanishing_order(a), -1);
    EXPECT_EQ(SplitRational::linear(a, 2).vanishing_order(a), 2);
    EXPECT_EQ(SplitRational::euler(a).vanishing_order(b), 0);
}

TEST(SplitRational, MultiplicationIsCommutativeAndAssociative) {
    std::vector<SplitRational> fs = {SplitRational::euler(a), SplitRational::linear(b, 2),
                                     SplitRational::linear(a * b / v, -3), SplitRational::constant(c) * SplitRational::x_power(2),
                                     SplitRational::euler(a + b)};
    for (const auto& f : fs)
        for (const auto& g : fs) {
            EXPECT_EQ(f * g, g * f);
            for (const auto& h : fs) EXPECT_EQ((f * g) * h, f * (g * h));
        }
}

TEST(IdealGenerator, TwoCoprimeLFactors) {
    auto g = ideal_generator({SplitRational::euler(a), SplitRational::euler(b)});
    EXPECT_EQ(g.generator, SplitRational::euler(a) * SplitRational::euler(b));
    EXPECT_TRUE(g.is_lfactor);
}

TEST(IdealGenerator, UnitIdealAbsorbed) {
    auto g = ideal_generator({SplitRational::euler(a), SplitRational{}});
    EXPECT_EQ(g.generator, SplitRational::euler(a));
}

TEST(IdealGenerator, PrincipalWithoutUnits) {
    auto g = ideal_generator({SplitRational::linear(a)});
    EXPECT_EQ(g.generator, SplitRational::linear(a));
    EXPECT_FALSE(g.is_lfactor);
    EXPECT_FALSE(g.contains_units);
}

TEST(IdealGenerator, NormalizesUnitsAndPermutationInvariant) {
    std::vector<SplitRational> fs = {
        SplitRational::constant(Scalar(3) * a) * SplitRational::x_power(4) * SplitRational::linear(b, -2),
        SplitRational::linear(b, 1) * SplitRational::euler(c),
        SplitRational::linear(a, 3)};
    auto g = ideal_generator(fs);
    EXPECT_EQ(g.generator, SplitRational::linear(b, -2) * SplitRational::euler(c));
    std::vector<SplitRational> perm = {fs[2], fs[0], fs[1], fs[0]};
    EXPECT_EQ(ideal_generator(perm).generator, g.generator);
    for (const auto& f : fs)
        for (const auto& fac : f.factors()) EXPECT_GE(f.vanishing_order(fac.beta), g.generator.vanishing_order(fac.beta));
}
