#pragma once

// Finite-dimensional algebras given by structure constants, and the
// Lie/Leibniz machinery built on them.

#include <optional>
#include <string>
#include <vector>

#include "locaut/linalg.hpp"

namespace locaut {

enum class AlgebraKind { Lie, Leibniz, Unchecked };

std::string to_string(AlgebraKind kind);

/// [e_i, e_j] = sum_k c[i][j][k] e_k, stored densely as one coordinate
/// vector per ordered basis pair.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(std::size_t dim, std::vector<std::string> labels, AlgebraKind kind = AlgebraKind::Unchecked);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  AlgebraKind kind() const { return kind_; }
  void set_kind(AlgebraKind kind) { kind_ = kind; }

  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[i * dim_ + j][k]; }
  void set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value);
  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set_basis_bracket(std::size_t i, std::size_t j, Vector value);

  /// Bilinear extension of the basis brackets. Throws DimensionMismatch when
  /// a coordinate vector does not belong to this algebra.
  Vector bracket(const Vector& x, const Vector& y) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  AlgebraKind kind_ = AlgebraKind::Unchecked;
  std::vector<Vector> table_;
};

struct IdentityViolation {
  std::string identity;  // "antisymmetry", "jacobi" or "leibniz"
  std::size_t i = 0, j = 0, k = 0;
  Vector defect;
};

/// Checks the defining identity of `kind` on every basis pair/triple, which
/// suffices by multilinearity. Empty result means the algebra is valid.
std::vector<IdentityViolation> validate(const StructureAlgebra& alg, AlgebraKind kind);

/// span{[U, V]} for subspaces of the algebra.
Subspace bracket_span(const StructureAlgebra& alg, const Subspace& u, const Subspace& v);

/// span{[x, x]} = span{[e_i, e_j] + [e_j, e_i] : i <= j}.
Subspace squares_ideal(const StructureAlgebra& alg);

struct Quotient {
  StructureAlgebra algebra;
  /// Coordinates of the quotient in terms of the original basis: maps an
  /// original coordinate vector to its class.
  Matrix projection;
  /// Original basis indices that survive as the quotient basis.
  std::vector<std::size_t> kept;
};

/// Quotient of alg by an ideal, with induced structure constants.
Quotient quotient(const StructureAlgebra& alg, const Subspace& ideal);
/// Quotient by the ideal of squares; always a Lie algebra.
Quotient liezation(const StructureAlgebra& alg);

/// L^0 = L, L^k = [L^{k-1}, L], stopping once the series stabilises.
std::vector<Subspace> lower_central_series(const StructureAlgebra& alg);
Subspace center(const StructureAlgebra& alg);
bool is_nilpotent(const StructureAlgebra& alg);
/// Nilpotent with dim L^k = n - k - 1 for 1 <= k <= n - 1.
bool is_filiform(const StructureAlgebra& alg);

struct AdaptedBasisReport {
  bool ok = true;
  std::vector<std::string> problems;
};
/// Checks [e_1, e_i] = e_{i+1} (2 <= i <= n-1), [e_i, e_{n-1}] = 0 (3 <= i <= n)
/// and that e_n is central.
AdaptedBasisReport check_adapted_filiform_basis(const StructureAlgebra& alg);

struct BracketFailure {
  std::size_t i = 0, j = 0;
  Vector expected;  // map([e_i, e_j])
  Vector actual;    // [map(e_i), map(e_j)]  (or reversed order for anti checks)
};

/// First basis pair on which map([x, y]) != [map x, map y]. The map acts on
/// coordinate vectors: coords(map(x)) = map * coords(x).
std::optional<BracketFailure> find_homomorphism_failure(const StructureAlgebra& alg, const Matrix& map);
/// Same for map([x, y]) = [map y, map x].
std::optional<BracketFailure> find_antihomomorphism_failure(const StructureAlgebra& alg, const Matrix& map);
bool is_automorphism(const StructureAlgebra& alg, const Matrix& map);

}  // namespace locaut
