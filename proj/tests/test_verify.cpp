#include <gtest/gtest.h>

#include "lfac/verify.hpp"

using namespace lfac;
using namespace lfac::verify;

namespace {

const Scalar a = Scalar::symbol("a"), b = Scalar::symbol("b"), c = Scalar::symbol("c"), d = Scalar::symbol("d");
Character unr(const Scalar& s) { return Character::unramified(s); }

std::string failures_of(const CheckReport& r) {
    std::string s;
    for (const auto& f : r.failures) s += f + "\n";
    return s;
}

}  // namespace

TEST(RandomRep, Deterministic) {
    TrialProfile p;
    p.seed = 42;
    EXPECT_EQ(random_rep(p), random_rep(p));
    p.block_budget = 1;
    EXPECT_EQ(random_rep(p).blocks().size(), 1u);
    p.block_budget = 0;
    EXPECT_THROW(random_rep(p), DomainError);
}

TEST(RandomRep, RespectsProfile) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        TrialProfile p;
        p.seed = s;
        WDRep w = random_rep(p);
        EXPECT_TRUE(w.all_characters());
        EXPECT_LE(w.blocks().size(), 4u);
        for (const auto& blk : w.blocks()) EXPECT_LE(blk.n, 3);
    }
}

TEST(RandomGsp4, AlwaysValid) {
    TrialProfile p;
    p.allow_irred = true;
    for (int i = 0; i < 100; ++i) {
        Rng r(trial_seed(5, i));
        Gsp4Param pi = random_gsp4(r, p);
        EXPECT_EQ(pi.rep.dim(), 4);
        EXPECT_TRUE(pi.rep.similitude_check(pi.similitude));
    }
}

TEST(Checks, LineRatioExamples) {
    auto r1 = check_line_ratio(WDRep::block(unr(a)) + WDRep::block(unr(b), 1));
    EXPECT_TRUE(r1.pass()) << failures_of(r1);
    EXPECT_TRUE(check_line_ratio(WDRep::block(unr(a), 3)).pass());
    EXPECT_TRUE(check_line_ratio(WDRep::sp(1)).pass());
    EXPECT_FALSE(check_line_ratio(WDRep::block(IrredPart::make(2, "r", unr(a)))).pass());
}

TEST(Checks, SteinbergExamples) {
    auto st = gl2_steinberg();
    for (const auto& pi : {gsp4_IVa(unr(a)), gsp4_IIIa(unr(a), unr(b)), gsp4_SC("l4")}) {
        auto r = check_steinberg_factor(pi, st);
        EXPECT_TRUE(r.pass()) << failures_of(r);
    }
    EXPECT_FALSE(check_steinberg_factor(gsp4_IVa(unr(a)), gl2_supercuspidal("l", unr(a))).pass());
}

TEST(Checks, ThetaExamples) {
    auto st = gl2_steinberg();
    EXPECT_TRUE(check_theta_product(st, st, gl2_principal_series(unr(c), unr(d))).pass());
    auto t1 = gl2_principal_series(unr(a), unr(b)), t2 = gl2_principal_series(unr(c), unr(a * b / c));
    EXPECT_TRUE(check_theta_product(t1, t2, st).pass());
    auto s1 = gl2_supercuspidal("l1", unr(a)), s2 = gl2_supercuspidal("l2", unr(a));
    EXPECT_TRUE(check_theta_product(s1, s2, gl2_supercuspidal("m", unr(b))).pass());
}

TEST(Checks, IdealOracleCatchesWrongGenerator) {
    Rng r(3);
    auto rep = check_ideal_oracle({SplitRational::euler(a), SplitRational::linear(a + b, -2) * SplitRational::linear(c)}, r);
    EXPECT_TRUE(rep.pass()) << failures_of(rep);
}

TEST(Checks, NumericModeAgrees) {
    Rng r(9);
    auto rep = check_line_ratio(WDRep::block(unr(a)) + WDRep::block(unr(b), 1) + WDRep::block(unr(c * a), 2), "n",
                                true, &r);
    EXPECT_TRUE(rep.pass()) << failures_of(rep);
}

TEST(Checks, VanishingOnCatalogShapes) {
    std::vector<Gsp4Param> shapes = {gsp4_I(unr(a), unr(b), unr(c)), gsp4_IIIa(unr(a), unr(b)), gsp4_IVa(unr(a)),
                                     gsp4_catalog("IIa", {unr(a), unr(b)}), gsp4_catalog("Va", {unr(-1), unr(b)}),
                                     gsp4_catalog("VIa", {unr(b)}),
                                     gsp4_catalog("X", {IrredPart::make(2, "r", unr(c)), unr(b)}),
                                     gsp4_catalog("XIa", {IrredPart::make(2, "r", Character::trivial()), unr(b)})};
    for (const auto& pi : shapes) {
        auto rep = check_subregular_vanishing(pi);
        EXPECT_TRUE(rep.pass()) << failures_of(rep);
    }
}

TEST(Suites, AllPassSmall) {
    SuiteOptions o;
    o.trials = 25;
    o.seed = 7;
    for (const auto& n : suite_names()) {
        auto rep = run_suite(n, o);
        EXPECT_TRUE(rep.pass()) << n << "\n" << failures_of(rep);
        EXPECT_GE(rep.trials, 25) << n;
    }
    o.numeric = true;
    auto rep = run_suite("lines", o);
    EXPECT_TRUE(rep.pass()) << failures_of(rep);
    EXPECT_THROW(run_suite("nope", o), DomainError);
}

TEST(Suites, Reproducible) {
    SuiteOptions o;
    o.trials = 10;
    o.seed = 99;
    auto x = run_suite("poles", o), y = run_suite("poles", o);
    EXPECT_EQ(x.trials, y.trials);
    EXPECT_EQ(x.failures, y.failures);
}
