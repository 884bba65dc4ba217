#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "thetalab/error.hpp"
#include "thetalab/local_order.hpp"

namespace thetalab {
namespace {

using testing::P;
using testing::vars;

const auto xyz = vars({"x", "y", "z"});
const auto xy = vars({"x", "y"});

TEST(ParsePoly, Binomial) {
  const Poly p = P("x*y - z^2", xyz);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient(Monomial({1, 1, 0})), 1);
  EXPECT_EQ(p.coefficient(Monomial({0, 0, 2})), -1);
  EXPECT_EQ(to_string(p, xyz), "x*y - z^2");
}

TEST(ParsePoly, ExpandsPowers) {
  EXPECT_EQ(P("(x+y)^2", xy), P("x^2 + 2*x*y + y^2", xy));
  const Poly cubic = P("x^3 + y^3", xy);
  EXPECT_EQ(cubic.size(), 2u);
  EXPECT_EQ(cubic.degree(), 3);
}

TEST(ParsePoly, RationalsAndUnaryMinus) {
  const Poly p = P("-1/2*x + 3/4", xy);
  EXPECT_EQ(p.coefficient(Monomial({1, 0})), Rational(-1, 2));
  EXPECT_EQ(p.constant_term(), Rational(3, 4));
  EXPECT_EQ(P("-z", xyz), -Poly::variable(3, 2));
}

TEST(ParsePoly, RejectsDoubleStar) {
  try {
    (void)P("x**y", xy);
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Syntax);
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(ParsePoly, RejectsImplicitMultiplication) {
  EXPECT_THROW((void)P("2x", xy), ParseError);
  EXPECT_THROW((void)P("x y", xy), ParseError);
  EXPECT_THROW((void)P("", xy), ParseError);
  EXPECT_THROW((void)P("(x+y", xy), ParseError);
  EXPECT_THROW((void)P("x/0", xy), ParseError);
}

TEST(ParsePoly, UnknownVariable) {
  try {
    (void)P("x + w", xy);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVariable);
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Partial, PowerRule) {
  const Poly f = P("x*y - z^2", xyz);
  EXPECT_EQ(partial(f, 0), P("y", xyz));
  EXPECT_EQ(partial(f, 2), P("-2*z", xyz));
  EXPECT_TRUE(partial(P("y^3", xy), 0).is_zero());
  EXPECT_THROW((void)partial(f, 3), Error);
}

TEST(JacobianIdeal, Examples) {
  EXPECT_EQ(jacobian_ideal(P("x*y - z^2", xyz)),
            (std::vector<Poly>{P("y", xyz), P("x", xyz), P("-2*z", xyz)}));
  EXPECT_EQ(jacobian_ideal(P("x^3 + y^3", xy)), (std::vector<Poly>{P("3*x^2", xy), P("3*y^2", xy)}));
  EXPECT_EQ(jacobian_ideal(P("x^2 + y^3", xy)), (std::vector<Poly>{P("2*x", xy), P("3*y^2", xy)}));
}

TEST(PolyProperties, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Poly a = testing::random_poly(rng, n, 6, 4);
    const Poly b = testing::random_poly(rng, n, 6, 4);
    const Poly c = testing::random_poly(rng, n, 6, 4);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    const Poly ab = a * b;
    for (const auto& [m, coef] : ab.terms()) ASSERT_NE(coef, 0);
  }
}

TEST(PolyProperties, PrintParseRoundTrip) {
  std::mt19937 rng(7);
  const auto ring = vars({"x", "y", "z", "w"});
  for (int trial = 0; trial < 500; ++trial) {
    const Poly p = testing::random_poly(rng, 4, 6, 5);
    ASSERT_EQ(parse_poly(to_string(p, ring), ring), p) << to_string(p, ring);
  }
}

TEST(LocalOrder, OneIsLargest) {
  const LocalOrder ord;
  const Monomial one = Monomial::one(3);
  for (int a = 0; a <= 10; ++a) {
    for (int b = 0; a + b <= 10; ++b) {
      for (int c = 0; a + b + c <= 10; ++c) {
        const Monomial m({a, b, c});
        if (m.is_one()) continue;
        ASSERT_TRUE(ord.greater(one, m));
      }
    }
  }
}

TEST(LocalOrder, TotalAndMultiplicative) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 4);
  const LocalOrder ord;
  const LocalOrder permuted(std::vector<std::size_t>{2, 0, 3, 1});
  auto rand_mono = [&] { return Monomial({e(rng), e(rng), e(rng), e(rng)}); };
  for (int trial = 0; trial < 2000; ++trial) {
    const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
    for (const LocalOrder* o : {&ord, &permuted}) {
      const auto ab = o->compare(a, b);
      ASSERT_EQ(ab == std::strong_ordering::equal, a == b);
      ASSERT_EQ(o->compare(b, a), 0 <=> ab);
      ASSERT_EQ(o->compare(a * c, b * c), ab);
    }
  }
}

TEST(LocalOrder, LeadingTermIsLowestDegree) {
  const LocalOrder ord;
  EXPECT_EQ(ord.leading_monomial(P("x - x^2", xy)), Monomial({1, 0}));
  EXPECT_EQ(ord.leading_monomial(P("1 + x", xy)), Monomial({0, 0}));
  // revlex tie-break: y is last, so x^2 > x*y > y^2
  EXPECT_EQ(ord.leading_monomial(P("y^2 + x*y + x^2", xy)), Monomial({2, 0}));
}

}  // namespace
}  // namespace thetalab
