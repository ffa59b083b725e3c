#include <gtest/gtest.h>

#include "equimult/parse.hpp"
#include "support/corpus.hpp"

using namespace equimult;

namespace {

std::size_t error_position(const char* src) {
    try {
        parse_poly(src);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for " << src;
    return ~std::size_t{0};
}

} // namespace

TEST(Parse, Examples) {
    EXPECT_EQ(parse_poly("y^2 - x^3"), BiPoly({{{0, 2}, 1}, {{3, 0}, -1}}));
    EXPECT_EQ(parse_poly("3/2*x^2*y - y"), BiPoly({{{2, 1}, make_rational(3, 2)}, {{0, 1}, -1}}));
    EXPECT_THROW(parse_poly("x*(x+y)"), ParseError);
}

TEST(Parse, Grammar) {
    EXPECT_EQ(parse_poly("  -x  +  2 * y ^ 3 "), BiPoly({{{1, 0}, -1}, {{0, 3}, 2}}));
    EXPECT_EQ(parse_poly("x*x*y"), BiPoly::monomial({2, 1}));
    EXPECT_EQ(parse_poly("x^0"), BiPoly(1));
    EXPECT_EQ(parse_poly("0"), BiPoly());
    EXPECT_EQ(parse_poly("4/6"), BiPoly(make_rational(2, 3)));
    EXPECT_EQ(parse_poly("-1/2"), BiPoly(make_rational(-1, 2)));
    EXPECT_EQ(parse_poly("x - x"), BiPoly());
    EXPECT_EQ(parse_poly("123456789012345678901234567890*x").coeff({1, 0}),
              Rational(Integer("123456789012345678901234567890")));
}

TEST(Parse, ErrorsCarryPosition) {
    EXPECT_EQ(error_position("x*(x+y)"), 2u);
    EXPECT_EQ(error_position("x + z"), 4u);
    EXPECT_EQ(error_position("x^-2"), 2u);
    EXPECT_EQ(error_position("1/0*x"), 2u);
    EXPECT_EQ(error_position(""), 0u);
    EXPECT_EQ(error_position("x +"), 3u);
    EXPECT_EQ(error_position("2x"), 1u);
    EXPECT_EQ(error_position("--x"), 1u);
    EXPECT_EQ(error_position("x^"), 2u);
    EXPECT_EQ(error_position("x/2"), 1u);
    EXPECT_EQ(error_position("x^99999"), 2u);

    try {
        parse_poly("x + z");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_STREQ(e.what(), "parse error at column 5: unknown variable 'z'");
    }
}

TEST(Properties, RenderParseRoundTrip) {
    corpus::Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const BiPoly p = corpus::random_poly(rng, 0, 6, 0.4);
        EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
    }
}
