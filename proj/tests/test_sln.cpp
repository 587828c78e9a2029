#include <gtest/gtest.h>

#include <random>

#include "locaut/sln.hpp"
#include "oracles.hpp"

using namespace locaut;

namespace {

Vector V(std::initializer_list<Scalar> xs) { return Vector(xs); }

CanonicalShape random_shape(std::mt19937_64& rng, std::size_t n, int eps, Flavor sigma) {
  return {eps, sigma, oracle::random_invertible(rng, n)};
}

}  // namespace

TEST(SlnModel, DimensionsAndRoots) {
  EXPECT_EQ(build_sln(2).dim(), 3u);
  EXPECT_EQ(build_sln(3).positive_roots().size(), 3u);
  EXPECT_EQ(build_sln(4).dim(), 15u);
  EXPECT_THROW(build_sln(1), std::invalid_argument);
}

TEST(SlnModel, StructureConstantsMatchCommutators) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const SlnModel m(n);
    EXPECT_TRUE(validate(m.algebra(), AlgebraKind::Lie).empty());
    for (std::size_t a = 0; a < m.dim(); ++a) {
      EXPECT_TRUE(m.basis()[a].trace().is_zero());
      for (std::size_t b = 0; b < m.dim(); ++b) {
        const Matrix c = m.basis()[a] * m.basis()[b] - m.basis()[b] * m.basis()[a];
        ASSERT_EQ(m.matrix(m.algebra().basis_bracket(a, b)), c);
      }
    }
  }
}

TEST(SlnModel, CoordinatesRoundTrip) {
  std::mt19937_64 rng(11);
  const SlnModel m(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix x = oracle::random_traceless(rng, 3);
    ASSERT_EQ(m.matrix(m.coords(x)), x);
  }
  EXPECT_THROW(m.coords(Matrix::identity(3)), std::invalid_argument);
}

TEST(SlnModel, CartanActsByRootValues) {
  const SlnModel m(3);
  const Matrix h = Matrix::diagonal(V({5, -2, -3}));
  for (auto [i, j] : m.roots()) {
    const Matrix e = Matrix::unit(3, i, j);
    EXPECT_EQ(commutator(h, e), root_value(h, i, j) * e);
  }
  EXPECT_EQ(commutator(h, Matrix::unit(3, 0, 1)), Scalar(7) * Matrix::unit(3, 0, 1));
}

TEST(StronglyRegular, Examples) {
  const SlnModel sl2(2), sl3(3);
  EXPECT_TRUE(is_strongly_regular(sl2, Matrix::diagonal(V({1, -1}))));
  // eps1 - eps3 and eps3 - eps2 both take the value 1.
  EXPECT_FALSE(is_strongly_regular(sl3, Matrix::diagonal(V({1, -1, 0}))));
  EXPECT_EQ(strongly_regular_matrix(sl3), Matrix::diagonal(V({4 - 28, 16 - 28, 64 - 28})));
  for (std::size_t n = 2; n <= 5; ++n) {
    const SlnModel m(n);
    EXPECT_TRUE(is_strongly_regular(m, strongly_regular_matrix(m)));
  }
}

TEST(Shapes, Examples) {
  const Matrix x{{1, 2}, {3, -1}};
  EXPECT_EQ(apply_shape({1, Flavor::Identity, Matrix::identity(2)}, x), x);
  EXPECT_EQ(apply_shape({-1, Flavor::Transpose, Matrix::identity(2)}, Matrix::unit(2, 0, 1)), -Matrix::unit(2, 1, 0));
  EXPECT_EQ(apply_shape({1, Flavor::Identity, Matrix{{0, 1}, {1, 0}}}, Matrix::unit(2, 0, 1)), Matrix::unit(2, 1, 0));
  EXPECT_THROW(apply_shape({1, Flavor::Identity, Matrix::identity(2)}, Matrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(apply_shape({1, Flavor::Identity, Matrix(2, 2)}, x), std::invalid_argument);
}

TEST(Shapes, AutomorphismFlagMatchesBracketBehaviour) {
  std::mt19937_64 rng(12);
  for (std::size_t n : {2, 3}) {
    const SlnModel m(n);
    for (auto [eps, sigma] : kShapeOrder) {
      const CanonicalShape s = random_shape(rng, n, eps, sigma);
      const Matrix map = shape_map(m, s);
      const bool hom = !find_homomorphism_failure(m.algebra(), map);
      const bool anti = !find_antihomomorphism_failure(m.algebra(), map);
      EXPECT_EQ(shape_is_automorphism(s), hom) << n << " " << eps << " " << to_string(sigma);
      EXPECT_EQ(!shape_is_automorphism(s), anti) << n << " " << eps << " " << to_string(sigma);
      for (const auto& e : m.basis()) EXPECT_TRUE(apply_shape(s, e).trace().is_zero());
    }
  }
  EXPECT_FALSE(shape_is_automorphism({1, Flavor::Transpose, Matrix::identity(2)}));
  EXPECT_TRUE(shape_is_automorphism({-1, Flavor::Transpose, Matrix::identity(2)}));
}

TEST(Shapes, CompositionOnBasis) {
  std::mt19937_64 rng(13);
  for (std::size_t n : {2, 3}) {
    const SlnModel m(n);
    for (auto [e1, s1] : kShapeOrder)
      for (auto [e2, s2] : kShapeOrder) {
        const CanonicalShape first = random_shape(rng, n, e1, s1);
        const CanonicalShape second = random_shape(rng, n, e2, s2);
        const CanonicalShape both = compose_shapes(first, second);
        EXPECT_EQ(both.epsilon, e1 * e2);
        for (const auto& b : m.basis()) ASSERT_EQ(apply_shape(both, b), apply_shape(second, apply_shape(first, b)));
      }
  }
}

TEST(SquareZero, SpanningSetIsNilpotentAndSpans) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const SlnModel m(n);
    std::vector<Vector> coords;
    for (const auto& x : square_zero_spanning_set(m)) {
      EXPECT_TRUE((x * x).is_zero());
      coords.push_back(m.coords(x));
    }
    EXPECT_EQ(Subspace::span(m.dim(), coords).dim(), m.dim());
  }
  const auto set2 = square_zero_spanning_set(SlnModel(2));
  EXPECT_NE(std::find(set2.begin(), set2.end(), (Matrix{{1, -1}, {1, -1}})), set2.end());
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const Matrix x = random_square_zero(3, rng);
    ASSERT_TRUE((x * x).is_zero());
    ASSERT_FALSE(x.is_zero());
  }
}

TEST(SquareZero, Preservation) {
  const SlnModel m(2);
  const Matrix conj = shape_map(m, {1, Flavor::Identity, Matrix{{1, 2}, {0, 1}}});
  EXPECT_TRUE(preserves_square_zero(m, conj, 50).preserved);
  const Matrix transpose = m.map_from([](const Matrix& x) { return x.transpose(); });
  EXPECT_TRUE(preserves_square_zero(m, transpose, 50).preserved);
  // e12 <-> h, e21 fixed
  const Matrix h = Matrix::diagonal(V({1, -1}));
  Matrix swap = Matrix::from_columns({m.coords(h), m.coords(Matrix::unit(2, 1, 0)), m.coords(Matrix::unit(2, 0, 1))}, 3);
  const SquareZeroReport r = preserves_square_zero(m, swap, 50);
  EXPECT_FALSE(r.preserved);
  EXPECT_EQ(*r.counterexample, Matrix::unit(2, 0, 1));
  EXPECT_EQ(*r.image, h);
}
