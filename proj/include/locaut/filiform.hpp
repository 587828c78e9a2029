#pragma once

// Filiform Lie algebras in an adapted basis e_1..e_n, and the family of
// linear maps that are local automorphisms without being automorphisms.

#include <cstdint>
#include <optional>
#include <vector>

#include "locaut/liecore.hpp"

namespace locaut {

/// A Lie algebra that passes is_filiform and whose basis is adapted:
/// [e_1, e_i] = e_{i+1}, [e_i, e_{n-1}] = 0 for i >= 3, e_n central.
class FiliformAlgebra {
 public:
  /// Throws std::invalid_argument when any of the conditions fails.
  explicit FiliformAlgebra(StructureAlgebra algebra);

  std::size_t n() const { return algebra_.dim(); }
  const StructureAlgebra& algebra() const { return algebra_; }

 private:
  StructureAlgebra algebra_;
};

/// Only [e_1, e_i] = e_{i+1} and their negatives. Requires n >= 3.
FiliformAlgebra model_filiform(std::size_t n);

/// x -> x + alpha x_2 e_{n-1} + x_3 e_n.
Matrix phi_alpha(std::size_t n, const Scalar& alpha);
/// u -> u + beta u_2 e_n.
Matrix psi_beta(std::size_t n, const Scalar& beta);

struct AutomorphismCheck {
  bool automorphism = false;
  bool bijective = false;
  std::optional<BracketFailure> failure;
};
AutomorphismCheck phi_is_automorphism(const FiliformAlgebra& L, const Scalar& alpha);
AutomorphismCheck psi_is_automorphism(const FiliformAlgebra& L, const Scalar& beta);

struct LocalWitness {
  enum class Family { Phi, Psi };
  Family family = Family::Phi;
  Scalar parameter;  // alpha for Phi, beta for Psi
  Matrix map;
  Vector image;
};
/// An automorphism agreeing with x -> x + x_3 e_n at x: Phi_1 when x_2 = 0,
/// otherwise Psi_{x_3 / x_2}. Throws std::logic_error if the agreement or
/// the automorphism check fails.
LocalWitness filiform_local_witness(const FiliformAlgebra& L, const Vector& x);

struct FiliformDemoReport {
  std::size_t n = 0;
  Matrix delta;
  bool delta_bijective = false;
  /// Where Delta = Phi_0 breaks a bracket; empty means Delta is an automorphism.
  std::optional<BracketFailure> not_automorphism;
  std::vector<Vector> samples;
  std::size_t phi_witnesses = 0;
  std::size_t psi_witnesses = 0;
  std::vector<Vector> unwitnessed;

  bool holds() const {
    return delta_bijective && not_automorphism && unwitnessed.empty() &&
           phi_witnesses + psi_witnesses == samples.size();
  }
};

/// Integer points with coordinates in [-5, 5]; every fourth point has x_2 = 0.
std::vector<Vector> filiform_sample_points(std::size_t n, std::size_t count, std::uint64_t seed);

FiliformDemoReport filiform_demo(const FiliformAlgebra& L, std::size_t samples = 200, std::uint64_t seed = 0x5eed);

}  // namespace locaut
