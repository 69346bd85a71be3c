#include <gtest/gtest.h>

#include "lfac/wdrep.hpp"

using namespace lfac;

namespace {

const Scalar a = Scalar::symbol("a"), b = Scalar::symbol("b"), c = Scalar::symbol("c"), d = Scalar::symbol("d");
Scalar vp(int k) { return Scalar::sqrt_q_power(k); }
Character unr(const Scalar& s) { return Character::unramified(s); }
WDRep line(const Scalar& s, int n = 0) { return WDRep::block(unr(s), n); }

}  // namespace

TEST(Character, GroupLaw) {
    EXPECT_EQ(Character::abs(HalfInt::halves(1)) * Character::abs(HalfInt::halves(1)), unr(vp(-2)));
    auto eta = Character::ramified("eta");
    EXPECT_TRUE((eta * eta.inverse()).is_trivial());
    EXPECT_EQ(char_mul(unr(a), unr(b)), unr(a * b));
    EXPECT_FALSE((eta * eta).is_unramified());
    EXPECT_FALSE((eta * Character::ramified("zeta")).is_unramified());
}

TEST(WDRep, Dual) {
    EXPECT_EQ(line(a).dual(), line(a.inverse()));
    EXPECT_EQ(WDRep::sp(1).dual(), WDRep::sp(1));
    WDRep w = line(a, 2) + WDRep::block(Character::ramified("eta", b), 1) +
              WDRep::block(IrredPart::make(2, "rho", unr(c))) + WDRep::block(IrredPart::make(3, "tau", unr(d)));
    EXPECT_EQ(w.dual().dual(), w);
}

TEST(WDRep, Twist) {
    EXPECT_EQ(line(a, 1).twist(Character::abs(HalfInt::halves(1))), line(a * vp(-1), 1));
    WDRep w = line(a) + WDRep::block(IrredPart::make(2, "rho", unr(c)), 1);
    EXPECT_EQ(w.twist(Character::trivial()), w);
    auto chi = Character::ramified("eta", b);
    EXPECT_EQ(w.twist(chi).twist(chi.inverse()), w);
    // twist commutes with dual up to inverting the character
    EXPECT_EQ(w.twist(chi).dual(), w.dual().twist(chi.inverse()));
}

TEST(WDRep, IrredTwistMultipliesDet) {
    auto rho = IrredPart::make(3, "tau", unr(c));
    EXPECT_EQ(rho.twisted(unr(a)).det(), unr(c * a.pow(3)));
    // dim 2: the dual is the det^{-1} twist of the same representation
    auto r2 = IrredPart::make(2, "rho", unr(c));
    EXPECT_EQ(r2.dualized(), r2.twisted(unr(c).inverse()));
    EXPECT_EQ(r2.dualized().det(), unr(c.inverse()));
}

TEST(SpTensor, ClebschGordan) {
    EXPECT_EQ(sp_tensor(3, 1), (std::vector<int>{4, 2}));
    EXPECT_EQ(sp_tensor(0, 1), (std::vector<int>{1}));
    EXPECT_EQ(sp_tensor(2, 2), (std::vector<int>{4, 2, 0}));
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            int s = 0;
            for (int k : sp_tensor(m, n)) s += k + 1;
            EXPECT_EQ(s, (m + 1) * (n + 1));
        }
}

TEST(Tensor, SteinbergRule) {
    EXPECT_EQ(tensor(line(a, 1), WDRep::sp(1)), line(a, 2) + line(a));
    EXPECT_EQ(tensor(WDRep::sp(1), WDRep::sp(1)), WDRep::sp(2) + WDRep::sp(0));
}

TEST(Tensor, WithPrincipalSeriesSplitsIntoTwists) {
    WDRep phi = line(a, 1) + line(b) + WDRep::block(IrredPart::make(2, "rho", unr(c)));
    auto x1 = unr(c), x2 = Character::ramified("eta", d);
    EXPECT_EQ(tensor(phi, WDRep::block(x1) + WDRep::block(x2)), phi.twist(x1) + phi.twist(x2));
    EXPECT_EQ(tensor(phi, WDRep::block(x1) + WDRep::block(x2)).dim(), phi.dim() * 2);
}

TEST(Tensor, IrredPairsAreRejected) {
    auto r = WDRep::block(IrredPart::make(2, "l", unr(a)));
    auto s = WDRep::block(IrredPart::make(2, "m", unr(b)));
    EXPECT_THROW(tensor(r, s), UnsupportedTensor);
    // The L-factor route treats non-twin pairs as 1 and rejects twins.
    EXPECT_TRUE(tensor_lfactor(r, s).is_one());
    auto twin = WDRep::block(IrredPart::make(2, "l", unr(a)).dualized().twisted(unr(c)));
    EXPECT_THROW(tensor_lfactor(r, twin), UnsupportedTensor);
}

TEST(LFactor, Blocks) {
    EXPECT_EQ(line(a, 3).lfactor(), SplitRational::euler(a * vp(-3)));
    EXPECT_TRUE(WDRep::block(Character::ramified("eta"), 2).lfactor().is_one());
    EXPECT_EQ((line(a) + line(b, 1)).lfactor(), SplitRational::euler(a) * SplitRational::euler(b * vp(-1)));
    EXPECT_TRUE(WDRep::block(IrredPart::make(2, "rho", unr(a)), 1).lfactor().is_one());
}

TEST(LFactor, SumAndTwistProperties) {
    WDRep x = line(a, 2) + line(b), y = line(c, 1) + WDRep::block(Character::ramified("eta"));
    EXPECT_EQ((x + y).lfactor(), x.lfactor() * y.lfactor());
    for (int t = -4; t <= 4; ++t)
        EXPECT_EQ(x.twist(Character::abs(HalfInt::halves(t))).lfactor(), x.lfactor().shift(HalfInt::halves(t)));
}

TEST(Summands, LineAndSteinberg) {
    WDRep w = line(a) + line(b, 1);
    EXPECT_EQ(w.summands(SummandKind::line), std::vector<Scalar>{a});
    EXPECT_EQ(w.summands(SummandKind::steinberg), std::vector<Scalar>{b});
    WDRep ir = WDRep::block(IrredPart::make(2, "l", unr(a)), 1);
    EXPECT_TRUE(ir.summands(SummandKind::line).empty());
    EXPECT_TRUE(ir.summands(SummandKind::steinberg).empty());
}

TEST(Similitude, Check) {
    EXPECT_TRUE((line(a) + line(b) + line(c / a) + line(c / b)).similitude_check(unr(c)));
    EXPECT_TRUE(line(a, 3).similitude_check(unr(a * a)));
    EXPECT_FALSE((line(a) + line(b) + line(c) + line(d)).similitude_check(unr(a * b * c * d)));
}

TEST(Similitude, LinesClosedUnderInvolution) {
    WDRep w = line(a) + line(b) + line(c / a) + line(c / b);
    auto ls = w.summands(SummandKind::line);
    std::vector<Scalar> image;
    for (const auto& x : ls) image.push_back(c / x);
    std::sort(image.begin(), image.end(), [](const Scalar& p, const Scalar& q) { return Scalar::compare(p, q) < 0; });
    EXPECT_EQ(image, ls);
}

TEST(LineRatio, WorkedExample) {
    WDRep rho = line(a) + line(b, 1);
    auto l = rho.lfactor();
    auto ratio = l * l.shift(HalfInt::whole(1)) / tensor(rho, WDRep::sp(1)).lfactor().shift(HalfInt::halves(1));
    EXPECT_EQ(ratio, SplitRational::euler(a));
}

TEST(LineRatio, OnlyHigherBlocks) {
    WDRep rho = line(a, 3);
    auto l = rho.lfactor();
    EXPECT_TRUE((l * l.shift(HalfInt::whole(1)) / tensor(rho, WDRep::sp(1)).lfactor().shift(HalfInt::halves(1))).is_one());
}

TEST(LineRatio, SecondIdentitySteinberg) {
    WDRep rho = WDRep::sp(1);
    auto t = tensor(rho, WDRep::sp(1)).lfactor();
    auto ratio = t.shift(HalfInt::halves(1)) * t.shift(HalfInt::halves(3)) /
                 tensor(tensor(rho, WDRep::sp(1)), WDRep::sp(1)).lfactor().shift(HalfInt::whole(1));
    EXPECT_EQ(ratio, SplitRational::euler(vp(-1)));
}
