#include "test_support.hpp"

using namespace dinv;
using dinv::test::P;
using dinv::test::R;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(to_string(R("4/6")), "2/3");
  EXPECT_EQ(to_string(R("0/5")), "0");
  EXPECT_EQ(R("0/5").get_den(), 1);
  EXPECT_EQ(to_string(R(" +7 / 14 ")), "1/2");
  EXPECT_THROW(R("1/0"), std::invalid_argument);
  EXPECT_THROW(R("1.5"), std::invalid_argument);
  EXPECT_THROW(R("1/-2"), std::invalid_argument);
  EXPECT_THROW(R(""), std::invalid_argument);
}

TEST(Rational, ZeroToTheZeroIsOne) {
  EXPECT_EQ(pow(Rational(0), 0), 1);
  EXPECT_EQ(pow(Rational(0), 3), 0);
  EXPECT_EQ(pow(R("-2/3"), 3), R("-8/27"));
  EXPECT_EQ(falling_factorial(3, 4), 0);
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_EQ(falling_factorial(5, 3), 60);
}

TEST(Polynomial, Add) {
  EXPECT_TRUE((P("x1", 2) + P("-x1", 2)).is_zero());
  EXPECT_EQ(P("1/2*x1^2", 2) + P("2*x2", 2), P("1/2*x1^2 + 2*x2", 2));
  EXPECT_EQ(P("1/2*x1^2 + 2*x2", 2) + P("1/2*x1^2", 2), P("x1^2 + 2*x2", 2));
  EXPECT_THROW(P("x1", 1) + P("x1", 2), std::invalid_argument);
}

TEST(Polynomial, Mul) {
  EXPECT_EQ(P("x1", 2) * P("x2", 2), P("x1*x2", 2));
  EXPECT_EQ(P("x1 + 1", 1) * P("x1 - 1", 1), P("x1^2 - 1", 1));
  const Polynomial p = P("1/2*x1^2 + 2*x2", 2);
  EXPECT_EQ(p * p, P("1/4*x1^4 + 2*x1^2*x2 + 4*x2^2", 2));
  EXPECT_THROW(P("x1", 1) * P("x1", 3), std::invalid_argument);
}

TEST(Polynomial, Partial) {
  EXPECT_EQ(partial(P("1/6*x1^3", 1), 0), P("1/2*x1^2", 1));
  EXPECT_EQ(partial(P("1/2*x1^2 + 2*x2", 2), 1), P("2", 2));
  const BasisSequence L = build_recursive(dinv::test::example1_params());
  EXPECT_EQ(partial(L[4], 0), L[3]);
  EXPECT_THROW(partial(P("x1", 2), 2), std::out_of_range);
}

TEST(Polynomial, Psi) {
  EXPECT_EQ(psi(P("x1^2", 2), 0), P("1/3*x1^3", 2));
  EXPECT_EQ(psi(P("1", 2), 1), P("x2", 2));
  const Polynomial p = P("x1^2*x2 + 3*x2^2", 2);
  EXPECT_EQ(psi(p, 1), P("1/2*x1^2*x2^2 + x2^3", 2));
  EXPECT_EQ(partial(psi(p, 1), 1), p);
  EXPECT_THROW(psi(p, 5), std::out_of_range);
}

TEST(Polynomial, RestrictFreeOf) {
  EXPECT_EQ(restrict_free_of(P("x1*x2 + x2^2", 2), 1), P("x2^2", 2));
  const Polynomial p = P("x1*x2 + x2^2 + 7", 2);
  EXPECT_EQ(restrict_free_of(p, 0), p);
  EXPECT_EQ(restrict_free_of(P("x1 + x2 + x3^2", 3), 2), P("x3^2", 3));
  EXPECT_THROW(restrict_free_of(p, 2), std::out_of_range);
}

TEST(Polynomial, ApplyDiff) {
  const auto origin = dinv::test::point({"0", "0"});
  const auto ones = dinv::test::point({"1", "1"});
  const Polynomial f = P("x1^3 - 2*x1*x2 + 5", 2);
  EXPECT_EQ(apply_diff({P("1", 2)}, f, ones), eval(f, ones));
  // (1/2)(2 x2) + 2 x1^2 at (1,1)
  EXPECT_EQ(apply_diff({P("1/2*x1^2 + 2*x2", 2)}, P("x1^2*x2", 2), ones), 3);
  const BasisSequence L = build_recursive(dinv::test::example1_params());
  EXPECT_EQ(apply_diff({L[2]}, P("x1^2", 2), origin), 1);
  EXPECT_THROW(apply_diff({P("x1", 3)}, f, ones), std::invalid_argument);
  EXPECT_THROW(apply_diff({P("x1", 2)}, f, dinv::test::point({"1"})), std::invalid_argument);
}

TEST(Polynomial, Compose) {
  const std::vector<Polynomial> h{P("x1", 1)};
  EXPECT_EQ(compose(P("x1^2", 1), h), P("x1^2", 1));
  const std::vector<Polynomial> subs{P("2*x1", 1), P("x1^2", 1)};
  EXPECT_EQ(compose(P("x1 + x2", 2), subs), P("x1^2 + 2*x1", 1));
  const std::vector<Polynomial> triple{P("3*x1", 1)};
  EXPECT_EQ(compose(P("x1^3", 1), triple), P("27*x1^3", 1));
  EXPECT_THROW(compose(P("x1 + x2", 2), h), std::invalid_argument);
  const std::vector<Polynomial> mixed{P("x1", 1), P("x1", 2)};
  EXPECT_THROW(compose(P("x1 + x2", 2), mixed), std::invalid_argument);
}

TEST(Polynomial, Eval) {
  EXPECT_EQ(eval(P("1/2*x1^2 + 2*x2", 2), dinv::test::point({"2", "1"})), 4);
  EXPECT_EQ(eval(P("x1^3*x2 - 3/4", 2), dinv::test::point({"0", "0"})), R("-3/4"));
  EXPECT_EQ(eval(Polynomial(3), dinv::test::point({"1", "2", "3"})), 0);
  EXPECT_THROW(eval(P("x1", 2), dinv::test::point({"1"})), std::invalid_argument);
}

TEST(Polynomial, DimensionIsPartOfIdentity) {
  EXPECT_NE(Polynomial::constant(1, 1), Polynomial::constant(2, 1));
  EXPECT_EQ(P("0", 2).degree(), -1);
  EXPECT_EQ(P("x1^2*x2 + x1", 2).degree(), 3);
}

TEST(PolynomialText, RendersCanonicalOrder) {
  EXPECT_EQ(render(P("4*x2 + 2*x2^2 + 3*x1*x2 + x1^2*x2 + 1/24*x1^4", 2)),
            "1/24*x1^4 + x1^2*x2 + 3*x1*x2 + 2*x2^2 + 4*x2");
  EXPECT_EQ(render(P("-x1 + 1 - 1/2*x2", 2)), "-x1 - 1/2*x2 + 1");
  EXPECT_EQ(render(Polynomial(2)), "0");
  EXPECT_EQ(render(dinv::test::H("3*h*h + 2")), "3*x1^2 + 2");
  EXPECT_EQ(render(dinv::test::H("3*h^2 + 2"), {"h"}), "3*h^2 + 2");
}

TEST(PolynomialText, ParseErrors) {
  EXPECT_THROW(parse_polynomial("x1 +", 2), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x3", 2), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x0", 2), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("y", 2), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("1/0*x1", 2), std::invalid_argument);
  EXPECT_EQ(parse_polynomial("x1*x3").dim(), 3u);
}

TEST(PolynomialJson, MatchesSchema) {
  const Json j = to_json(P("1/2*x1^2 - 3*x2", 2));
  EXPECT_EQ(j.dump(), R"({"dim":2,"terms":[{"exp":[2,0],"coef":"1/2"},{"exp":[0,1],"coef":"-3"}]})");
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"dim":2,"terms":[{"exp":[1],"coef":"1"}]})")),
               std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Properties over random instances.

class PolynomialProperties : public ::testing::Test {
 protected:
  Rng rng{seed_from_env()};
};

TEST_F(PolynomialProperties, PsiIsRightInverseOfPartial) {
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = uniform(rng, 1, 4);
    const Polynomial p = random_polynomial(rng, dim, uniform(rng, 0, 6), 8);
    const std::size_t var = uniform(rng, 0, static_cast<unsigned>(dim - 1));
    ASSERT_EQ(partial(psi(p, var), var), p);
  }
}

TEST_F(PolynomialProperties, OperatorsAreLinear) {
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = uniform(rng, 1, 3);
    const Polynomial p = random_polynomial(rng, dim, 5, 6);
    const Polynomial q = random_polynomial(rng, dim, 5, 6);
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const std::size_t var = uniform(rng, 0, static_cast<unsigned>(dim - 1));
    const Polynomial combo = a * p + b * q;
    ASSERT_EQ(partial(combo, var), a * partial(p, var) + b * partial(q, var));
    ASSERT_EQ(psi(combo, var), a * psi(p, var) + b * psi(q, var));
    ASSERT_EQ(restrict_free_of(combo, var), a * restrict_free_of(p, var) + b * restrict_free_of(q, var));
  }
}

TEST_F(PolynomialProperties, ApplyDiffIsBilinear) {
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = uniform(rng, 1, 3);
    const Polynomial op1 = random_polynomial(rng, dim, 3, 4);
    const Polynomial op2 = random_polynomial(rng, dim, 3, 4);
    const Polynomial f = random_polynomial(rng, dim, 5, 6);
    const Polynomial g = random_polynomial(rng, dim, 5, 6);
    std::vector<Rational> z;
    for (std::size_t i = 0; i < dim; ++i) z.push_back(random_rational(rng));
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    ASSERT_EQ(apply_diff({a * op1 + b * op2}, f, z), a * apply_diff({op1}, f, z) + b * apply_diff({op2}, f, z));
    ASSERT_EQ(apply_diff({op1}, a * f + b * g, z), a * apply_diff({op1}, f, z) + b * apply_diff({op1}, g, z));
  }
}

TEST_F(PolynomialProperties, TextAndJsonRoundTrip) {
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = uniform(rng, 1, 4);
    const Polynomial p = random_polynomial(rng, dim, uniform(rng, 0, 7), 10);
    ASSERT_EQ(parse_polynomial(render(p), dim), p) << render(p);
    ASSERT_EQ(polynomial_from_json(Json::parse(to_json(p).dump())), p);
  }
}

TEST_F(PolynomialProperties, ComposeRespectsEvaluation) {
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = uniform(rng, 1, 3);
    const std::size_t target = uniform(rng, 1, 3);
    const Polynomial f = random_polynomial(rng, dim, 4, 5);
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < dim; ++i) subs.push_back(random_polynomial(rng, target, 3, 4));
    std::vector<Rational> z;
    for (std::size_t i = 0; i < target; ++i) z.push_back(random_rational(rng));
    std::vector<Rational> inner;
    for (const auto& s : subs) inner.push_back(eval(s, z));
    ASSERT_EQ(eval(compose(f, subs), z), eval(f, inner));
  }
}
