#pragma once

// The special linear Lie algebra sl_n in a fixed basis, its root data, and
// the four canonical (anti)automorphism shapes x -> eps * a * sigma(x) * a^-1.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "locaut/liecore.hpp"
#include "locaut/linalg.hpp"

namespace locaut {

/// Basis: root vectors e_ij (i != j) in lexicographic order, then the Cartan
/// generators h_k = e_kk - e_{k+1,k+1}. Indices are 0-based.
class SlnModel {
 public:
  explicit SlnModel(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const StructureAlgebra& algebra() const { return algebra_; }

  /// Position of e_ij in the basis.
  std::size_t root_index(std::size_t i, std::size_t j) const;
  /// Position of h_k (0 <= k < n-1) in the basis.
  std::size_t cartan_index(std::size_t k) const { return n_ * (n_ - 1) + k; }
  /// (i, j) of every root vector, in basis order.
  const std::vector<std::pair<std::size_t, std::size_t>>& roots() const { return roots_; }
  /// Positive roots (i < j), lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> positive_roots() const;

  /// Throws std::invalid_argument for a non-traceless or wrongly sized matrix.
  Vector coords(const Matrix& x) const;
  Matrix matrix(const Vector& v) const;

  /// Coordinate matrix of a linear map given on matrices.
  template <class F>
  Matrix map_from(F&& f) const {
    std::vector<Vector> cols;
    cols.reserve(dim());
    for (const auto& b : basis_) cols.push_back(coords(f(b)));
    return Matrix::from_columns(cols, dim());
  }
  Matrix apply(const Matrix& map, const Matrix& x) const { return matrix(map * coords(x)); }

 private:
  std::size_t n_;
  std::vector<Matrix> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> roots_;
  StructureAlgebra algebra_;
};

/// Throws std::invalid_argument for n < 2.
SlnModel build_sln(std::size_t n);

Matrix commutator(const Matrix& x, const Matrix& y);

/// Value of the root eps_i - eps_j on a diagonal matrix.
Scalar root_value(const Matrix& h, std::size_t i, std::size_t j);

/// Roots take pairwise distinct values on h and the centralizer of h is the
/// Cartan subalgebra.
bool is_strongly_regular(const SlnModel& model, const Matrix& h);

/// diag(4, 16, ..., 4^n) shifted to trace zero.
Matrix strongly_regular_matrix(const SlnModel& model);
Vector strongly_regular_element(const SlnModel& model);

enum class Flavor { Identity, Transpose };
std::string to_string(Flavor f);

struct CanonicalShape {
  int epsilon = 1;
  Flavor sigma = Flavor::Identity;
  Matrix a;
};

/// The fixed order in which shapes are fitted.
inline constexpr std::pair<int, Flavor> kShapeOrder[] = {
    {1, Flavor::Identity}, {-1, Flavor::Transpose}, {1, Flavor::Transpose}, {-1, Flavor::Identity}};

bool is_automorphism_type(int epsilon, Flavor sigma);
/// Throws std::invalid_argument for non-traceless x or a singular conjugator.
Matrix apply_shape(const CanonicalShape& s, const Matrix& x);
bool shape_is_automorphism(const CanonicalShape& s);
/// Shape equal to applying `first`, then `second`.
CanonicalShape compose_shapes(const CanonicalShape& first, const CanonicalShape& second);
Matrix shape_map(const SlnModel& model, const CanonicalShape& s);

std::vector<Matrix> square_zero_spanning_set(const SlnModel& model);
/// Random rank-one nilpotent u v^t with v^t u = 0, integer entries.
Matrix random_square_zero(std::size_t n, std::mt19937_64& rng);

struct SquareZeroReport {
  bool preserved = true;
  std::optional<Matrix> counterexample;
  std::optional<Matrix> image;
};
SquareZeroReport preserves_square_zero(const SlnModel& model, const Matrix& map, std::size_t trials,
                                       std::uint64_t seed = 0x5eed);

}  // namespace locaut
