#pragma once

// Classification of linear maps on sl_n and M_n as automorphisms,
// anti-automorphisms, or maps that are not local automorphisms.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locaut/sln.hpp"

namespace locaut {

struct ShapeFitDim {
  int epsilon = 1;
  Flavor sigma = Flavor::Identity;
  std::size_t dim = 0;
};

namespace obstruction {
struct NotInjective {
  Vector kernel_vector;
};
/// Delta / lambda fits a canonical shape, but lambda is not +-1. The probe
/// polynomial is charpoly(Delta(y)) for y = diag(1, -1, 0, ..., 0).
struct LambdaNotUnit {
  Scalar lambda;
  Polynomial probe;
  Polynomial required;
  CanonicalShape shape;
};
struct NoShapeFits {
  std::vector<ShapeFitDim> dims;
};
struct SquareZeroBroken {
  Matrix x;
  Matrix image;
};
}  // namespace obstruction

using Obstruction = std::variant<obstruction::NotInjective, obstruction::LambdaNotUnit, obstruction::NoShapeFits,
                                 obstruction::SquareZeroBroken>;
std::string obstruction_name(const Obstruction& o);

enum class VerdictKind { Automorphism, AntiAutomorphism, NotLocal };
std::string to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::NotLocal;
  std::optional<CanonicalShape> shape;
  /// Every fitting shape in fit order (more than one only for n = 2).
  std::vector<CanonicalShape> alternatives;
  std::optional<Obstruction> obstruction;
};

struct ClassifyOptions {
  std::size_t square_zero_trials = 16;
  std::uint64_t seed = 0x5eed;
};

/// `map` is the coordinate matrix of Delta in the model basis.
Verdict classify_sln(const SlnModel& model, const Matrix& map, const ClassifyOptions& options = {});

/// Delta on M_n in the row-major matrix-unit basis (n^2 x n^2).
Verdict classify_mn(std::size_t n, const Matrix& map);

/// Fits Delta against one shape: the space of a with Delta(e) a = eps a sigma(e).
Subspace shape_fit_space(const SlnModel& model, const Matrix& map, int epsilon, Flavor sigma);

/// An automorphism shape Phi with Phi(x) = Delta(x), or nullopt.
std::optional<CanonicalShape> pointwise_witness(const SlnModel& model, const Matrix& map, const Matrix& x);

struct ProbeReport {
  Matrix probe;      // y = diag(1, -1, 0, ...)
  Matrix image;      // Delta(y)
  Polynomial charpoly;
  Polynomial required;  // (t - 1)(t + 1) t^(n-2)
  bool matches = false;
  /// Set when charpoly = t^n - c t^(n-2).
  std::optional<Scalar> lambda_squared;
  /// Canonical square root of lambda_squared, when it lies in Q(i).
  std::optional<Scalar> lambda;
};
ProbeReport local_aut_probe(const SlnModel& model, const Matrix& map);

/// Re-derives an obstruction from the map alone.
bool reverify_obstruction(const SlnModel& model, const Matrix& map, const Obstruction& o);

}  // namespace locaut
