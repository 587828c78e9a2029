#include <gtest/gtest.h>

#include <random>

#include "locaut/linalg.hpp"
#include "locaut/sln.hpp"
#include "oracles.hpp"

using namespace locaut;

namespace {

Polynomial P(std::initializer_list<long> low_first) {
  std::vector<Scalar> c;
  for (long v : low_first) c.emplace_back(v);
  return Polynomial(c);
}

Vector V(std::initializer_list<Scalar> xs) { return Vector(xs); }

}  // namespace

TEST(SolveLinear, Examples) {
  EXPECT_EQ(*solve_linear(Matrix::identity(2), V({1, 2})), V({1, 2}));
  EXPECT_FALSE(solve_linear(Matrix{{1, 1}, {1, 1}}, V({1, 0})));
  EXPECT_EQ(*solve_linear(Matrix{{2, 0}, {0, 3}}, V({1, 1})), V({Scalar::parse("1/2"), Scalar::parse("1/3")}));
  EXPECT_THROW(solve_linear(Matrix::identity(2), V({1})), DimensionMismatch);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel(Matrix(2, 2)).dim(), 2u);
  const Subspace k = kernel(Matrix{{1, 1}, {2, 2}});
  EXPECT_EQ(k, Subspace::span(2, {V({1, -1})}));
}

TEST(SolveLinear, RandomSystemsHaveZeroResidual) {
  std::mt19937_64 rng(500);
  std::uniform_int_distribution<int> size(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = size(rng), cols = size(rng);
    const Matrix a = oracle::random_integer_matrix(rng, rows, cols, 4);
    // b inside the column space, so the system is consistent.
    Vector x0(cols);
    for (auto& c : x0) c = oracle::random_scalar(rng, 5);
    const Vector b = a * x0;
    auto x = solve_linear(a, b);
    ASSERT_TRUE(x);
    ASSERT_TRUE(is_zero(a * *x - b));
    const Subspace k = kernel(a);
    ASSERT_EQ(k.dim(), cols - rank(a));
    for (const auto& v : k.basis()) ASSERT_TRUE(is_zero(a * v));
  }
}

TEST(Determinant, AgreesWithCofactorOracle) {
  std::mt19937_64 rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Matrix a = oracle::random_integer_matrix(rng, n, n);
    ASSERT_EQ(determinant(a), oracle::det(a));
    ASSERT_EQ(charpoly(a), oracle::charpoly(a));
  }
}

TEST(Determinant, GaussianEntries) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = oracle::random_scalar(rng, 4);
    ASSERT_EQ(determinant(a), oracle::det(a));
    ASSERT_EQ(charpoly(a), oracle::charpoly(a));
  }
}

TEST(Inverse, IsExactWhenNonsingular) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Matrix a = oracle::random_integer_matrix(rng, n, n, 3);
    auto inv = inverse(a);
    ASSERT_EQ(inv.has_value(), !oracle::det(a).is_zero());
    if (inv) {
      ASSERT_EQ(*inv * a, Matrix::identity(n));
      ASSERT_EQ(a * *inv, Matrix::identity(n));
    }
  }
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(Matrix::diagonal(V({1, -1, 0}))), P({-1, 1}) * P({1, 1}) * Polynomial::t());
  EXPECT_EQ(charpoly(Matrix(4, 4)), Polynomial::monomial(4));
  const Matrix jordan{{1, 1}, {0, 1}};
  EXPECT_EQ(charpoly(jordan), P({-1, 1}).pow(2));
  EXPECT_EQ(charpoly(jordan), oracle::charpoly(jordan));
  EXPECT_THROW(charpoly(Matrix(2, 3)), DimensionMismatch);
}

TEST(InvariantFactors, HandComputedSmithForms) {
  EXPECT_EQ(invariant_factors(Matrix(2, 2)), (std::vector<Polynomial>{Polynomial::t(), Polynomial::t()}));
  EXPECT_EQ(invariant_factors(Matrix::unit(2, 0, 1)), std::vector<Polynomial>{Polynomial::t().pow(2)});
  EXPECT_EQ(invariant_factors(Matrix::diagonal(V({1, -1}))), std::vector<Polynomial>{P({-1, 0, 1})});
  // diag(2, 2, 3): t - 2 | (t - 2)(t - 3)
  EXPECT_EQ(invariant_factors(Matrix::diagonal(V({2, 2, 3}))),
            (std::vector<Polynomial>{P({-2, 1}), P({-2, 1}) * P({-3, 1})}));
  // Jordan block J_2(1) plus J_1(1): (t-1) | (t-1)^2
  const Matrix j{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(invariant_factors(j), (std::vector<Polynomial>{P({-1, 1}), P({-1, 1}).pow(2)}));
  // Companion matrix of t^3 - 2 is cyclic over Q(i).
  const Matrix companion{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_EQ(invariant_factors(companion), std::vector<Polynomial>{P({-2, 0, 0, 1})});
}

TEST(InvariantFactors, ProductIsCharpolyAndChainDivides) {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix a = oracle::random_integer_matrix(rng, n, n, 2);
    if (trial % 3 == 0) a = Matrix::diagonal(V({1, 1, 2, 2})) * Scalar(1);  // repeated eigenvalues
    const auto f = invariant_factors(a);
    Polynomial prod(Scalar(1));
    for (std::size_t k = 0; k < f.size(); ++k) {
      ASSERT_EQ(f[k].leading(), Scalar(1));
      ASSERT_GE(f[k].degree(), 1);
      if (k > 0) ASSERT_TRUE(f[k - 1].divides(f[k]));
      prod = prod * f[k];
    }
    ASSERT_EQ(prod, oracle::charpoly(a));
  }
}

TEST(Similarity, Examples) {
  const Matrix e12 = Matrix::unit(2, 0, 1), e21 = Matrix::unit(2, 1, 0);
  auto a = similarity_witness(e12, e21);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a * e12, e21 * *a);
  EXPECT_TRUE(oracle::scalar_multiple(*a, Matrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(*similarity_witness(e12, e12), Matrix::identity(2));
  EXPECT_FALSE(similarity_witness(Matrix::diagonal(V({1, -1})), Matrix::diagonal(V({2, -2}))));
  // Equal characteristic polynomials, different invariant factors.
  EXPECT_EQ(charpoly(Matrix(2, 2)), charpoly(e12));
  EXPECT_FALSE(similarity_witness(Matrix(2, 2), e12));
}

TEST(Similarity, RandomConjugatesAreRecovered) {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    Matrix x = oracle::random_integer_matrix(rng, n, n, 2);
    if (trial % 4 == 0) x = Matrix(n, n);
    if (trial % 4 == 1) x = Matrix::unit(n, 0, 1);
    const Matrix g = oracle::random_invertible(rng, n);
    const Matrix y = g * x * *inverse(g);
    auto a = similarity_witness(x, y);
    ASSERT_TRUE(a);
    ASSERT_FALSE(determinant(*a).is_zero());
    ASSERT_EQ(*a * x, y * *a);
  }
}

TEST(Intertwiner, Examples) {
  const SlnModel sl2(2);
  IntertwinerPairs same, transposed, minus_transposed;
  for (const auto& e : sl2.basis()) {
    same.emplace_back(e, e);
    transposed.emplace_back(e, e.transpose());
    minus_transposed.emplace_back(e, -e.transpose());
  }
  const Subspace scalars = intertwiner_space(same, 2);
  EXPECT_EQ(scalars, Subspace::span(4, {flatten(Matrix::identity(2))}));
  EXPECT_EQ(intertwiner_space({}, 3).dim(), 9u);
  // Transposition reverses brackets, so e and e^t are inequivalent families.
  EXPECT_EQ(intertwiner_space(transposed, 2).dim(), 0u);
  const Subspace t = intertwiner_space(minus_transposed, 2);
  ASSERT_EQ(t.dim(), 1u);
  const Matrix gen = unflatten(t.basis().front(), 2);
  EXPECT_TRUE(oracle::scalar_multiple(gen, Matrix{{0, 1}, {-1, 0}}));
  for (const auto& e : sl2.basis()) EXPECT_EQ(e * gen, -(gen * e.transpose()));
}

TEST(Intertwiner, SchurOnSlnFamilies) {
  for (std::size_t n : {2, 3}) {
    const SlnModel model(n);
    IntertwinerPairs pairs;
    for (const auto& e : model.basis()) pairs.emplace_back(e, e);
    const Subspace s = intertwiner_space(pairs, n);
    ASSERT_EQ(s.dim(), 1u);
    EXPECT_FALSE(determinant(unflatten(s.basis().front(), n)).is_zero());
  }
}

TEST(InvertibleElement, Examples) {
  EXPECT_EQ(*invertible_element(Subspace::span(4, {flatten(Matrix::identity(2))}), 2), Matrix::identity(2));
  EXPECT_FALSE(invertible_element(Subspace::span(4, {flatten(Matrix::unit(2, 0, 1))}), 2));
  auto a = invertible_element(Subspace::span(4, {flatten(Matrix::unit(2, 0, 0)), flatten(Matrix::unit(2, 1, 1))}), 2);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, Matrix::identity(2));
  // A five-dimensional space exercises the pseudo-random path.
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < 5; ++k) gens.push_back(flatten(Matrix::unit(3, k % 3, (k + 1) % 3)));
  auto b = invertible_element(Subspace::span(9, gens), 3);
  ASSERT_TRUE(b);
  EXPECT_FALSE(determinant(*b).is_zero());
  // Strictly upper triangular matrices are never invertible.
  std::vector<Vector> upper{flatten(Matrix::unit(3, 0, 1)), flatten(Matrix::unit(3, 0, 2)), flatten(Matrix::unit(3, 1, 2))};
  EXPECT_FALSE(invertible_element(Subspace::span(9, upper), 3));
}

TEST(Subspace, JoinIntersectContains) {
  const Subspace a = Subspace::span(3, {V({1, 0, 0}), V({0, 1, 0})});
  const Subspace b = Subspace::span(3, {V({0, 1, 0}), V({0, 0, 1})});
  EXPECT_EQ(a.join(b).dim(), 3u);
  EXPECT_EQ(a.intersect(b), Subspace::span(3, {V({0, 2, 0})}));
  EXPECT_TRUE(a.contains(V({3, -1, 0})));
  EXPECT_FALSE(a.contains(V({0, 0, 1})));
  EXPECT_TRUE(a.join(b).contains(a));
}
