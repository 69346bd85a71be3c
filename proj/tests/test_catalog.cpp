#include <gtest/gtest.h>

#include "lfac/catalog.hpp"

using namespace lfac;

namespace {

const Scalar a = Scalar::symbol("a"), b = Scalar::symbol("b"), c = Scalar::symbol("c"), d = Scalar::symbol("d");
Scalar vp(int k) { return Scalar::sqrt_q_power(k); }
Character unr(const Scalar& s) { return Character::unramified(s); }
WDRep line(const Scalar& s, int n = 0) { return WDRep::block(unr(s), n); }
SplitRational E(const Scalar& s) { return SplitRational::euler(s); }

}  // namespace

TEST(Gl2, Constructors) {
    auto st = gl2_steinberg();
    EXPECT_EQ(st.rep, WDRep::sp(1));
    EXPECT_TRUE(st.central.is_trivial());
    auto ps = gl2_principal_series(unr(a), unr(b));
    EXPECT_EQ(ps.rep, line(a) + line(b));
    EXPECT_EQ(ps.central, unr(a * b));
    auto sc = gl2_supercuspidal("l", unr(c));
    EXPECT_EQ(sc.rep, WDRep::block(IrredPart::make(2, "l", unr(c))));
    EXPECT_EQ(sc.central, unr(c));
}

TEST(Gl2, ReduciblePrincipalSeriesNeedsFlag) {
    EXPECT_THROW(gl2_principal_series(unr(a), unr(a * vp(2))), TypeConstraintViolation);
    EXPECT_THROW(gl2_principal_series(unr(a * vp(2)), unr(a)), TypeConstraintViolation);
    auto p = gl2_principal_series(unr(a), unr(a * vp(2)), true);
    EXPECT_TRUE(p.reducible);
    EXPECT_EQ(p.rep, line(a) + line(a * vp(2)));
}

TEST(Gsp4, NamedShapes) {
    auto iva = gsp4_IVa(unr(a));
    EXPECT_EQ(iva.rep, line(a, 3));
    EXPECT_EQ(iva.similitude, unr(a * a));
    auto iiia = gsp4_IIIa(unr(a), unr(b));
    EXPECT_EQ(iiia.rep, line(a, 1) + line(b, 1));
    EXPECT_EQ(iiia.similitude, unr(a * b));
    EXPECT_THROW(gsp4_IIIa(unr(a), unr(a)), TypeConstraintViolation);
    auto sc = gsp4_SC("l4");
    EXPECT_EQ(sc.rep.blocks().size(), 1u);
    EXPECT_EQ(part_dim(sc.rep.blocks()[0].part), 4);
    EXPECT_TRUE(sc.rep.lfactor().is_one());
}

TEST(Gsp4, TypeI) {
    auto p = gsp4_I(unr(a), unr(b), unr(c));
    EXPECT_EQ(p.rep, line(a) + line(b) + line(c / a) + line(c / b));
    EXPECT_EQ(p.st_type, StType::I);
}

TEST(Gsp4, IrreducibleShapesHaveTrivialLFactor) {
    auto rho = IrredPart::make(2, "r", unr(c));
    auto rho2 = IrredPart::make(2, "s", unr(c));
    for (const auto& p : {gsp4_VII(unr(a), rho), gsp4_VIIIa(rho), gsp4_IXa(rho), gsp4_SC(rho, rho2), gsp4_SC("l")})
        EXPECT_TRUE(p.rep.lfactor().is_one()) << to_string(p.st_type);
    EXPECT_THROW(gsp4_SC(rho, rho), TypeConstraintViolation);
    EXPECT_THROW(gsp4_SC(rho, IrredPart::make(2, "s", unr(d))), TypeConstraintViolation);
}

TEST(Gsp4, SimilitudeEnforced) {
    EXPECT_THROW(gsp4_free(line(a) + line(b) + line(c) + line(d), unr(a * b * c * d)), SimilitudeViolation);
    EXPECT_THROW(gsp4_free(line(a) + line(b), unr(a * b)), SimilitudeViolation);
    EXPECT_NO_THROW(gsp4_free(line(a, 1) + line(a, 1), unr(a * a)));
}

TEST(Theta, Lifts) {
    auto t = theta_lift(gl2_principal_series(unr(a), unr(b)), gl2_principal_series(unr(c), unr(a * b / c)));
    EXPECT_EQ(t.rep, line(a) + line(b) + line(c) + line(a * b / c));
    EXPECT_EQ(t.similitude, unr(a * b));
    EXPECT_EQ(t.annotation, "theta");
    auto ss = theta_lift(gl2_steinberg(), gl2_steinberg());
    EXPECT_EQ(ss.rep, WDRep::sp(1) + WDRep::sp(1));
    EXPECT_TRUE(ss.similitude.is_trivial());
    EXPECT_THROW(theta_lift(gl2_supercuspidal("l", unr(a)), gl2_supercuspidal("m", unr(b))),
                 CentralCharacterMismatch);
}

TEST(Nov, IVaAgainstSteinberg) {
    auto pi = gsp4_IVa(unr(a));
    auto l = pi.rep.lfactor();
    EXPECT_EQ(nov_lfactor(pi, gl2_steinberg()).shift(HalfInt::halves(1)), E(a * vp(-3)) * E(a * vp(-5)));
    EXPECT_EQ(nov_lfactor(pi, gl2_steinberg()).shift(HalfInt::halves(1)), l * l.shift(HalfInt::whole(1)));
}

TEST(Nov, PrincipalSeriesIsProductOfTwists) {
    auto pi = gsp4_free(line(a, 1) + line(b) + line(a * a / b), unr(a * a));
    auto sigma = gl2_principal_series(unr(c), unr(d));
    EXPECT_EQ(nov_lfactor(pi, sigma), pi.rep.twist(unr(c)).lfactor() * pi.rep.twist(unr(d)).lfactor());
}

TEST(Nov, SupercuspidalAgainstSteinberg) {
    EXPECT_TRUE(nov_lfactor(gsp4_SC("l4"), gl2_steinberg()).is_one());
}

TEST(RankinSelberg, Examples) {
    EXPECT_EQ(rs_lfactor(gl2_steinberg(), gl2_steinberg()), E(vp(-2)) * E(1));
    EXPECT_EQ(rs_lfactor(gl2_principal_series(unr(a), unr(b)), gl2_principal_series(unr(c), unr(d))),
              E(a * c) * E(a * d) * E(b * c) * E(b * d));
    EXPECT_TRUE(rs_lfactor(gl2_supercuspidal("l", unr(a)), gl2_supercuspidal("m", unr(b))).is_one());
    auto tau = gl2_supercuspidal("l", unr(a));
    auto twin = gl2_supercuspidal(IrredPart::make(2, "l", unr(a)).dualized().twisted(unr(c)));
    EXPECT_THROW(rs_lfactor(tau, twin), UnsupportedPair);
}

TEST(ThetaLift, ProductFormula) {
    auto st = gl2_steinberg();
    auto sigma = gl2_principal_series(unr(c), unr(d));
    auto pi = theta_lift(st, st);
    EXPECT_EQ(nov_lfactor(pi, sigma), rs_lfactor(st, sigma) * rs_lfactor(st, sigma));
    EXPECT_EQ(nov_lfactor(pi, sigma), (E(c * vp(-1)) * E(d * vp(-1))).pow(2));
}

TEST(Catalog, BuiltinEntriesSatisfySimilitude) {
    const auto& cat = Catalog::builtin();
    for (const char* t : {"IIa", "Va", "VIa", "X", "XIa"}) EXPECT_NE(cat.find(t), nullptr) << t;
    auto chi = unr(a), sigma = unr(b);
    auto iia = gsp4_catalog("IIa", {chi, sigma});
    EXPECT_EQ(iia.rep, line(b) + line(a * b, 1) + line(a * a * b));
    EXPECT_EQ(iia.st_type, StType::IIa);
    auto va = gsp4_catalog("Va", {unr(-1), sigma});
    EXPECT_EQ(va.rep, line(b, 1) + line(-b, 1));
    auto via = gsp4_catalog("VIa", {sigma});
    EXPECT_EQ(via.rep, line(b, 1) + line(b, 1));
    auto rho = IrredPart::make(2, "r", unr(c));
    auto x = gsp4_catalog("X", {rho, sigma});
    EXPECT_EQ(x.similitude, unr(b * b * c));
    auto xia = gsp4_catalog("XIa", {IrredPart::make(2, "r", Character::trivial()), sigma});
    EXPECT_EQ(xia.similitude, unr(b * b));
    EXPECT_THROW(gsp4_catalog("XIa", {rho, sigma}), SimilitudeViolation);
    EXPECT_THROW(gsp4_catalog("IIa", {chi}), CatalogError);
    EXPECT_THROW(gsp4_catalog("Nope", {}), CatalogError);
}

TEST(Catalog, TextFormatErrors) {
    Catalog k;
    EXPECT_THROW(k.load_text("type A\nend\n"), CatalogError);
    EXPECT_THROW(k.load_text("lfac-catalog 2\n"), CatalogError);
    EXPECT_THROW(k.load_text("lfac-catalog 1\ntype A\n params x:char\n block x 0\n"), CatalogError);
    EXPECT_THROW(k.load_text("lfac-catalog 1\ntype A\n params x:foo\nend\n"), CatalogError);
    k.load_text("lfac-catalog 1\ntype Lines\n params x:char\n block x 0\n block x*abs(1/2) 0\n block x^-1 0\n"
                " block x^-1*abs(-1/2) 0\n similitude abs(0)\n source test\nend\n");
    auto p = k.instantiate("Lines", {unr(a)});
    EXPECT_EQ(p.rep, line(a) + line(a * vp(-1)) + line(a.inverse()) + line(a.inverse() * vp(1)));
    EXPECT_EQ(p.annotation, "catalog:Lines");
}
