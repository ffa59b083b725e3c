#include <array>

#include <gtest/gtest.h>

#include "equimult/parse.hpp"
#include "equimult/singular.hpp"
#include "support/corpus.hpp"

using namespace equimult;
using equimult::corpus::Rng;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

unsigned triangle(unsigned m) { return m * (m + 1) / 2; }

} // namespace

TEST(CurveGerm, RejectsInvalid) {
    EXPECT_THROW(CurveGerm{BiPoly()}, InvalidGerm);
    EXPECT_THROW(CurveGerm{P("1 + x")}, InvalidGerm);
    EXPECT_THROW(multiplicity(BiPoly(3)), InvalidGerm);
    EXPECT_THROW(deg_Z(P("2 + y^2")), InvalidGerm);
}

TEST(Singular, Multiplicity) {
    EXPECT_EQ(multiplicity(P("y^2 - x^3")), 2u);
    EXPECT_EQ(multiplicity(P("x*y")), 2u);
    EXPECT_EQ(multiplicity(P("x^3 + y^3 + x^4")), 3u);
}

TEST(Singular, TangentCone) {
    EXPECT_EQ(tangent_cone(P("y^2 - x^3")), P("y^2"));
    EXPECT_EQ(tangent_cone(P("x*y + x^3")), P("x*y"));
    EXPECT_EQ(tangent_cone(P("x^3 + y^3 + x^4")), P("x^3 + y^3"));
}

TEST(Singular, Unitangential) {
    EXPECT_TRUE(is_unitangential(P("y^2 - x^3")));
    EXPECT_FALSE(is_unitangential(P("x*y")));
    EXPECT_FALSE(is_unitangential(P("x^3 + y^3")));
    EXPECT_TRUE(is_unitangential(P("x^2 + 2*x*y + y^2")));
    EXPECT_TRUE(is_unitangential(P("y + x^2")));
    EXPECT_TRUE(is_unitangential(P("8*x^3 - 12*x^2*y + 6*x*y^2 - y^3")));
}

TEST(Singular, LinearPowerPattern) {
    EXPECT_TRUE(is_linear_power(P("y^3"), 3));
    EXPECT_TRUE(is_linear_power(P("-2*x^4"), 4));
    EXPECT_TRUE(is_linear_power(P("x^2 - 2*x*y + y^2"), 2));
    EXPECT_FALSE(is_linear_power(P("x^2 + y^2"), 2));
    EXPECT_FALSE(is_linear_power(P("x*y^2"), 3));
    EXPECT_FALSE(is_linear_power(P("x^2*y"), 3));
    EXPECT_TRUE(is_linear_power(P("3*x - y"), 1));
}

TEST(Singular, EquimultIdealJet) {
    EXPECT_EQ(equimult_ideal_jet(P("y^2")).rank(), 1u);
    EXPECT_EQ(equimult_ideal_jet(P("x*y")).rank(), 2u);
    EXPECT_EQ(equimult_ideal_jet(P("y^3 + x^5")).rank(), 1u);
    EXPECT_EQ(equimult_ideal_jet(P("y^3 + x^5")), span(std::array{to_jet_vector(P("y^2"), 3)}));
}

TEST(Singular, DegZ) {
    EXPECT_EQ(deg_Z(P("y^2 - x^3")), 2u);
    EXPECT_EQ(deg_Z(P("x*y")), 1u);
    EXPECT_EQ(deg_Z(P("y^3 + x^5")), 5u);
}

TEST(Singular, SectionAmbiguity) {
    EXPECT_EQ(section_ambiguity(P("y^2 - x^3")), 1u);
    EXPECT_EQ(section_ambiguity(P("x*y")), 0u);
    EXPECT_EQ(section_ambiguity(P("y")), 1u);
}

TEST(Singular, Analyze) {
    EXPECT_EQ(analyze(P("y^2 - x^3")), (SingularityReport{2, P("y^2"), true, 2, 1}));
    EXPECT_EQ(analyze(P("x*y")), (SingularityReport{2, P("x*y"), false, 1, 0}));
    EXPECT_EQ(analyze(P("x^2 + 2*x*y + y^2")), (SingularityReport{2, P("x^2 + 2*x*y + y^2"), true, 2, 1}));
    EXPECT_THROW(analyze(P("1 + x")), InvalidGerm);
}

// Below degree m the partials of f agree with the partials of its tangent cone.
TEST(Singular, JetOfPartialsSeesOnlyTheCone) {
    Rng rng(30);
    for (const auto& g : corpus::germ_corpus(rng, 6, 10)) {
        const unsigned m = multiplicity(g.f);
        const BiPoly cone = tangent_cone(g.f);
        for (Var v : {Var::x, Var::y}) {
            EXPECT_EQ(to_jet_vector(partial(g.f, v), m), to_jet_vector(partial(cone, v), m)) << g.name;
        }
    }
}

TEST(Properties, DegZFormulaLaw) {
    Rng rng(31);
    for (const auto& g : corpus::germ_corpus(rng, 6, 25)) {
        const CurveGerm germ(g.f);
        const bool uni = is_unitangential_by_binomial(germ);
        const unsigned expected = triangle(germ.m()) - (uni ? 1 : 2);
        EXPECT_EQ(deg_Z(germ), expected) << g.name << ": " << g.f;
    }
}

TEST(Properties, BinomialPatternAgreesWithCatalecticant) {
    Rng rng(32);
    for (const auto& g : corpus::germ_corpus(rng, 7, 25)) {
        const CurveGerm germ(g.f);
        const BiPoly cone = tangent_cone(g.f);
        EXPECT_EQ(is_linear_power(cone, germ.m()), corpus::is_linear_power_catalecticant(cone, germ.m())) << g.f;
        EXPECT_EQ(is_unitangential(germ), is_unitangential_by_binomial(germ)) << g.f;
    }
}

TEST(Properties, EulerLowerBound) {
    Rng rng(33);
    for (const auto& g : corpus::germ_corpus(rng, 6, 15)) {
        EXPECT_GE(equimult_ideal_jet(g.f).rank(), 1u) << g.f;
    }
}

TEST(Properties, CoordinateInvariance) {
    Rng rng(34);
    for (const auto& g : corpus::germ_corpus(rng, 5, 4)) {
        const SingularityReport before = analyze(g.f);
        for (int trial = 0; trial < 10; ++trial) {
            const auto phi = corpus::random_linear_change(rng);
            const BiPoly moved = substitute(g.f, phi.sx, phi.sy);
            EXPECT_EQ(deg_Z(moved), before.degZ) << g.f;
            EXPECT_EQ(is_unitangential(moved), before.unitangential) << g.f;
            EXPECT_EQ(section_ambiguity(moved), before.ambiguity) << g.f;
        }
    }
}

TEST(Properties, BruteForceColength) {
    Rng rng(35);
    for (const auto& g : corpus::germ_corpus(rng, 4, 15)) {
        if (multiplicity(g.f) > 4) continue;
        EXPECT_EQ(deg_Z(g.f), corpus::deg_Z_brute_force(g.f)) << g.name << ": " << g.f;
    }
}

TEST(Properties, AmbiguityIffUnitangential) {
    Rng rng(36);
    for (const auto& g : corpus::germ_corpus(rng, 6, 15)) {
        const unsigned amb = section_ambiguity(g.f);
        EXPECT_LE(amb, 1u);
        EXPECT_EQ(amb == 1, is_unitangential(g.f)) << g.f;
    }
}
