#include <gtest/gtest.h>

#include <random>

#include "locaut/exactnum.hpp"
#include "oracles.hpp"

using namespace locaut;

namespace {

Polynomial P(std::initializer_list<long> low_first) {
  std::vector<Scalar> c;
  for (long v : low_first) c.emplace_back(v);
  return Polynomial(c);
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  Rational q(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(Rational(0).den(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), Rational(mpz_class(-5), mpz_class(2)));
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DivisionByZero);
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(Rational, SquareRoots) {
  EXPECT_EQ(*Rational::parse("9/4").sqrt(), Rational::parse("3/2"));
  EXPECT_FALSE(Rational(2).sqrt());
  EXPECT_FALSE(Rational(-4).sqrt());
}

TEST(GaussianRational, Examples) {
  const Scalar one_plus_i = Scalar::parse("1+i");
  const Scalar one_minus_i = Scalar::parse("1-i");
  EXPECT_EQ(gr_mul(one_plus_i, one_minus_i), Scalar(2));
  EXPECT_EQ(gr_inv(Scalar(2)), Scalar::parse("1/2"));
  // z * i = 1 has the solution z = -i
  const Scalar z = gr_inv(Scalar::i());
  EXPECT_EQ(z, Scalar::parse("-i"));
  EXPECT_EQ(z * Scalar::i(), Scalar(1));
  EXPECT_THROW(gr_inv(Scalar(0)), DivisionByZero);
  EXPECT_FALSE(Scalar(0).try_inv());
}

TEST(GaussianRational, ParseAndPrintRoundTrip) {
  for (const char* text : {"0", "7", "-1/2", "i", "-i", "3/4*i", "1/2+3/4*i", "-5-2*i", "2-i"}) {
    const Scalar z = Scalar::parse(text);
    EXPECT_EQ(Scalar::parse(z.str()), z) << text;
  }
  EXPECT_EQ(Scalar::parse("1/2+3/4*i").str(), "1/2+3/4*i");
  EXPECT_EQ(Scalar::parse("-1*i").str(), "-1*i");
  EXPECT_EQ(Scalar::parse(" 2 - i "), Scalar(Rational(2), Rational(-1)));
}

TEST(GaussianRational, SquareRootIsCanonical) {
  EXPECT_EQ(*Scalar(4).sqrt(), Scalar(2));
  EXPECT_EQ(*Scalar(-1).sqrt(), Scalar::i());
  EXPECT_EQ(*Scalar(-9).sqrt(), Scalar(Rational(0), Rational(3)));
  // (1 + 2i)^2 = -3 + 4i
  EXPECT_EQ(*Scalar(Rational(-3), Rational(4)).sqrt(), Scalar(Rational(1), Rational(2)));
  EXPECT_EQ(*Scalar(Rational(-3), Rational(-4)).sqrt(), Scalar(Rational(1), Rational(-2)));
  EXPECT_FALSE(Scalar(2).sqrt());
  EXPECT_FALSE(Scalar::i().sqrt());
}

TEST(GaussianRational, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const Scalar a = oracle::random_scalar(rng);
    const Scalar b = oracle::random_scalar(rng);
    const Scalar c = oracle::random_scalar(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a.conj().conj(), a);
    ASSERT_EQ(a.norm().sign() > 0, !a.is_zero());
    if (!a.is_zero()) {
      ASSERT_EQ(gr_inv(gr_inv(a)), a);
      ASSERT_EQ(a * a.inv(), Scalar(1));
    }
  }
}

TEST(Polynomial, Evaluation) {
  EXPECT_EQ(poly_eval(P({-1, 0, 1}), Scalar(1)), Scalar(0));
  EXPECT_EQ(poly_eval(P({0, -1, 0, 1}), Scalar(2)), Scalar(6));
  EXPECT_EQ(poly_eval(Polynomial(), Scalar(17)), Scalar(0));
  EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, Multiplication) {
  const Polynomial t_minus_1 = P({-1, 1});
  const Polynomial t_plus_1 = P({1, 1});
  EXPECT_EQ(poly_mul(t_minus_1, t_plus_1), P({-1, 0, 1}));
  // (t+1)(t-1)t at n = 3
  EXPECT_EQ(poly_mul(poly_mul(t_minus_1, t_plus_1), Polynomial::t()), P({0, -1, 0, 1}));
  EXPECT_TRUE(poly_mul(t_minus_1, Polynomial()).is_zero());
  EXPECT_EQ(P({0, -1, 0, 1}).str(), "t^3 - t");
}

TEST(Polynomial, DivisionWithRemainder) {
  const Polynomial num = P({1, 0, 0, 1});  // t^3 + 1
  const Polynomial den = P({1, 1});
  auto [q, r] = num.divmod(den);
  EXPECT_EQ(q, P({1, -1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_TRUE(den.divides(num));
  EXPECT_FALSE(P({-1, 1}).divides(num));
  EXPECT_THROW(num.divmod(Polynomial()), DivisionByZero);
}

TEST(Polynomial, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Scalar> pc(deg(rng) + 1), qc(deg(rng) + 1);
    for (auto& c : pc) c = oracle::random_scalar(rng);
    for (auto& c : qc) c = oracle::random_scalar(rng);
    const Polynomial p(pc), q(qc);
    const Scalar t = oracle::random_scalar(rng);
    ASSERT_EQ(poly_eval(poly_mul(p, q), t), poly_eval(p, t) * poly_eval(q, t));
    if (!p.is_zero() && !q.is_zero()) ASSERT_EQ(poly_mul(p, q).degree(), p.degree() + q.degree());
  }
}
