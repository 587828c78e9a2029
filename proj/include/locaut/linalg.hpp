#pragma once

// Dense exact linear algebra over the Gaussian rationals.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locaut/exactnum.hpp"

namespace locaut {

using Vector = std::vector<Scalar>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  /// Row-wise literal, e.g. Matrix{{1, 2}, {3, 4}}.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  /// Matrix unit e_{ij} (0-based indices).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_diagonal() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix operator-() const { return *this * Scalar(-1); }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
bool is_zero(const Vector& v);
Vector unit_vector(std::size_t dim, std::size_t k);

/// Row-major flattening of a square matrix and its inverse.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t n);

/// Linear subspace of Scalar^ambient_dim, stored as the nonzero rows of a
/// reduced row echelon form, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  /// Pivot column of each basis vector.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// v reduced against the basis: zero on every pivot coordinate.
  Vector reduce(const Vector& v) const;
  Subspace join(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// One solution of a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);
/// Null space of a, as a subspace of Scalar^cols.
Subspace kernel(const Matrix& a);

/// Fraction-free (Bareiss) determinant.
Scalar determinant(const Matrix& a);
/// nullopt for singular input.
std::optional<Matrix> inverse(const Matrix& a);

/// det(t*1 - x), via the Faddeev-LeVerrier recurrence.
Polynomial charpoly(const Matrix& x);

/// Smith normal form of t*1 - x over Q(i)[t]: the non-unit diagonal entries,
/// monic, each dividing the next. Their product is charpoly(x).
std::vector<Polynomial> invariant_factors(const Matrix& x);

/// Invertible a with a x a^{-1} = y, or nullopt when x and y are not similar.
std::optional<Matrix> similarity_witness(const Matrix& x, const Matrix& y);

/// Pairs (A_k, B_k) of n x n matrices; intertwiner_space returns
/// {a : A_k a = a B_k for all k} in row-major coordinates of a.
using IntertwinerPairs = std::vector<std::pair<Matrix, Matrix>>;
Subspace intertwiner_space(const IntertwinerPairs& pairs, std::size_t n);

/// An invertible element of a subspace of n x n matrices (row-major
/// coordinates). Dimension <= 3 is searched exhaustively on the grid
/// {0..n}^dim, which is a complete zero test for a determinant of degree n.
/// Larger subspaces try 64 seeded pseudo-random integer points, then the same
/// grid up to kGridCutoff evaluations.
std::optional<Matrix> invertible_element(const Subspace& space, std::size_t n);
inline constexpr std::size_t kGridCutoff = 200000;

}  // namespace locaut
