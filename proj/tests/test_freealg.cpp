#include "hoe/freealg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hoe;

namespace {

constexpr Symbol y = 0, z = 1;

NCPoly gen(Symbol s) { return NCPoly::generator(s, 2); }

NCPoly random_poly(std::mt19937& rng, std::size_t alphabet)
{
    std::uniform_int_distribution<int> nterms(1, 5), deg(0, 4), coef(-6, 6), den(1, 4);
    std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(alphabet - 1));
    NCPoly p(alphabet);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Word w(static_cast<std::size_t>(deg(rng)));
        for (auto& s : w) s = sym(rng);
        p.add_term(w, make_scalar(coef(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST(FreeAlgebra, ProductIsConcatenation)
{
    NCPoly p = nc_arith(ArithOp::mul, gen(y), gen(z));
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.leading_word(), (Word{y, z}));
    EXPECT_EQ(p.leading_coeff(), 1);
}

TEST(FreeAlgebra, NoCommutation)
{
    NCPoly p = (gen(y) + gen(z)) * (gen(y) - gen(z));
    NCPoly expected(2);
    expected.add_term({y, y}, 1);
    expected.add_term({y, z}, -1);
    expected.add_term({z, y}, 1);
    expected.add_term({z, z}, -1);
    EXPECT_EQ(p, expected);
    EXPECT_EQ(format_poly(p, {"y", "z"}), "-z^2 + z*y - y*z + y^2");
}

TEST(FreeAlgebra, ScalarZeroAnnihilates)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        NCPoly p = random_poly(rng, 2);
        EXPECT_TRUE(nc_arith(ArithOp::scalar_mul, p, NCPoly(), Scalar(0)).is_zero());
    }
}

TEST(FreeAlgebra, RingLawsOnRandomPolynomials)
{
    std::mt19937 rng(1234);
    const NCPoly one = NCPoly::one(3);
    for (int i = 0; i < 200; ++i) {
        NCPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(one * a, a);
        EXPECT_EQ(a * one, a);
        EXPECT_TRUE((a + nc_arith(ArithOp::negate, a)).terms().empty());
    }
}

TEST(FreeAlgebra, RationalCoefficientsStayCanonical)
{
    NCPoly p = NCPoly::monomial({y}, make_scalar(2, 4), 2);
    EXPECT_EQ(p.leading_coeff().get_num(), 1);
    EXPECT_EQ(p.leading_coeff().get_den(), 2);
    p += NCPoly::monomial({y}, make_scalar(-1, 2), 2);
    EXPECT_TRUE(p.is_zero());
}

TEST(FreeAlgebra, MismatchedGeneratorSetsRejected)
{
    NCPoly a = NCPoly::generator(0, 2);
    NCPoly b = NCPoly::generator(0, 3);
    EXPECT_THROW(a + b, MismatchedGenerators);
    EXPECT_THROW(a * b, MismatchedGenerators);
    // constants are compatible with any alphabet
    EXPECT_NO_THROW(a + NCPoly::one());
}

TEST(FreeAlgebra, DegLexOrder)
{
    EXPECT_TRUE(deglex_less({z}, {y, y}));
    EXPECT_TRUE(deglex_less({y, z}, {z, y}));
    EXPECT_FALSE(deglex_less({z, y}, {z, y}));
    NCPoly p = gen(z) * gen(y) + gen(y) * gen(y) * gen(y);
    EXPECT_EQ(p.leading_word(), (Word{y, y, y}));
}
