#include "locaut/filiform.hpp"

#include <random>
#include <stdexcept>

namespace locaut {

FiliformAlgebra::FiliformAlgebra(StructureAlgebra algebra) : algebra_(std::move(algebra)) {
  if (algebra_.dim() < 3) throw std::invalid_argument("filiform algebras need dimension >= 3");
  if (!validate(algebra_, AlgebraKind::Lie).empty()) throw std::invalid_argument("not a Lie algebra");
  if (!is_filiform(algebra_)) throw std::invalid_argument("not filiform");
  const AdaptedBasisReport adapted = check_adapted_filiform_basis(algebra_);
  if (!adapted.ok) throw std::invalid_argument("basis is not adapted: " + adapted.problems.front());
  algebra_.set_kind(AlgebraKind::Lie);
}

FiliformAlgebra model_filiform(std::size_t n) {
  if (n < 3) throw std::invalid_argument("filiform algebras need dimension >= 3");
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back("e" + std::to_string(k));
  StructureAlgebra alg(n, labels, AlgebraKind::Lie);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    alg.set_constant(0, i, i + 1, Scalar(1));
    alg.set_constant(i, 0, i + 1, Scalar(-1));
  }
  return FiliformAlgebra(std::move(alg));
}

Matrix phi_alpha(std::size_t n, const Scalar& alpha) {
  if (n < 3) throw std::invalid_argument("filiform algebras need dimension >= 3");
  Matrix m = Matrix::identity(n);
  m(n - 2, 1) += alpha;
  m(n - 1, 2) += Scalar(1);
  return m;
}

Matrix psi_beta(std::size_t n, const Scalar& beta) {
  if (n < 3) throw std::invalid_argument("filiform algebras need dimension >= 3");
  Matrix m = Matrix::identity(n);
  m(n - 1, 1) += beta;
  return m;
}

namespace {

AutomorphismCheck check_map(const FiliformAlgebra& L, const Matrix& map) {
  AutomorphismCheck out;
  out.bijective = !determinant(map).is_zero();
  out.failure = find_homomorphism_failure(L.algebra(), map);
  out.automorphism = out.bijective && !out.failure;
  return out;
}

}  // namespace

AutomorphismCheck phi_is_automorphism(const FiliformAlgebra& L, const Scalar& alpha) {
  return check_map(L, phi_alpha(L.n(), alpha));
}

AutomorphismCheck psi_is_automorphism(const FiliformAlgebra& L, const Scalar& beta) {
  return check_map(L, psi_beta(L.n(), beta));
}

LocalWitness filiform_local_witness(const FiliformAlgebra& L, const Vector& x) {
  const std::size_t n = L.n();
  if (x.size() != n) throw DimensionMismatch("point does not belong to the algebra");
  LocalWitness w;
  if (x[1].is_zero()) {
    w.family = LocalWitness::Family::Phi;
    w.parameter = Scalar(1);
    w.map = phi_alpha(n, w.parameter);
  } else {
    w.family = LocalWitness::Family::Psi;
    w.parameter = x[2] / x[1];
    w.map = psi_beta(n, w.parameter);
  }
  w.image = w.map * x;
  if (w.image != phi_alpha(n, Scalar(0)) * x) throw std::logic_error("witness disagrees with Delta at x");
  if (!is_automorphism(L.algebra(), w.map)) throw std::logic_error("witness is not an automorphism");
  return w;
}

std::vector<Vector> filiform_sample_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-5, 5);
  std::vector<Vector> out;
  for (std::size_t s = 0; s < count; ++s) {
    Vector x(n);
    for (auto& c : x) c = Scalar(coord(rng));
    if (s % 4 == 0) x[1] = Scalar(0);
    out.push_back(std::move(x));
  }
  return out;
}

FiliformDemoReport filiform_demo(const FiliformAlgebra& L, std::size_t samples, std::uint64_t seed) {
  FiliformDemoReport r;
  r.n = L.n();
  r.delta = phi_alpha(r.n, Scalar(0));
  const AutomorphismCheck check = check_map(L, r.delta);
  r.delta_bijective = check.bijective;
  r.not_automorphism = check.failure;
  r.samples = filiform_sample_points(r.n, samples, seed);
  for (const auto& x : r.samples) {
    try {
      const LocalWitness w = filiform_local_witness(L, x);
      ++(w.family == LocalWitness::Family::Phi ? r.phi_witnesses : r.psi_witnesses);
    } catch (const std::logic_error&) {
      r.unwitnessed.push_back(x);
    }
  }
  return r;
}

}  // namespace locaut
