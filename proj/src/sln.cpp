#include "locaut/sln.hpp"

#include <set>
#include <stdexcept>

namespace locaut {

SlnModel::SlnModel(std::size_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      roots_.emplace_back(i, j);
      basis_.push_back(Matrix::unit(n, i, j));
    }
  for (std::size_t k = 0; k + 1 < n; ++k) basis_.push_back(Matrix::unit(n, k, k) - Matrix::unit(n, k + 1, k + 1));

  std::vector<std::string> labels;
  for (auto [i, j] : roots_) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t k = 0; k + 1 < n; ++k) labels.push_back("h" + std::to_string(k + 1));
  algebra_ = StructureAlgebra(dim(), labels, AlgebraKind::Lie);
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) algebra_.set_basis_bracket(a, b, coords(commutator(basis_[a], basis_[b])));
}

std::size_t SlnModel::root_index(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) throw std::out_of_range("not a root");
  return i * (n_ - 1) + (j < i ? j : j - 1);
}

std::vector<std::pair<std::size_t, std::size_t>> SlnModel::positive_roots() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto r : roots_)
    if (r.first < r.second) out.push_back(r);
  return out;
}

Vector SlnModel::coords(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("matrix size does not match sl_n");
  if (!x.trace().is_zero()) throw std::invalid_argument("matrix is not traceless");
  Vector v(dim());
  for (std::size_t r = 0; r < roots_.size(); ++r) v[r] = x(roots_[r].first, roots_[r].second);
  Scalar partial;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    partial += x(k, k);
    v[cartan_index(k)] = partial;
  }
  return v;
}

Matrix SlnModel::matrix(const Vector& v) const {
  if (v.size() != dim()) throw DimensionMismatch("coordinate vector does not match sl_n");
  Matrix x(n_, n_);
  for (std::size_t r = 0; r < roots_.size(); ++r) x(roots_[r].first, roots_[r].second) = v[r];
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    x(k, k) += v[cartan_index(k)];
    x(k + 1, k + 1) -= v[cartan_index(k)];
  }
  return x;
}

SlnModel build_sln(std::size_t n) { return SlnModel(n); }

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Scalar root_value(const Matrix& h, std::size_t i, std::size_t j) { return h(i, i) - h(j, j); }

bool is_strongly_regular(const SlnModel& model, const Matrix& h) {
  if (!h.is_diagonal()) return false;
  std::vector<Scalar> seen;
  for (auto [i, j] : model.roots()) {
    Scalar v = root_value(h, i, j);
    for (const auto& s : seen)
      if (s == v) return false;
    seen.push_back(std::move(v));
  }
  const Vector hc = model.coords(h);
  Matrix ad(model.dim(), model.dim());
  for (std::size_t b = 0; b < model.dim(); ++b) {
    const Vector col = model.algebra().bracket(hc, unit_vector(model.dim(), b));
    for (std::size_t r = 0; r < model.dim(); ++r) ad(r, b) = col[r];
  }
  std::vector<Vector> cartan;
  for (std::size_t k = 0; k + 1 < model.n(); ++k) cartan.push_back(unit_vector(model.dim(), model.cartan_index(k)));
  return kernel(ad) == Subspace::span(model.dim(), cartan);
}

Matrix strongly_regular_matrix(const SlnModel& model) {
  const std::size_t n = model.n();
  Vector d(n);
  Scalar power(1), total;
  for (std::size_t k = 0; k < n; ++k) {
    power *= Scalar(4);
    d[k] = power;
    total += power;
  }
  const Scalar mean = total / Scalar(static_cast<long>(n));
  for (auto& x : d) x -= mean;
  Matrix h = Matrix::diagonal(d);
  if (!is_strongly_regular(model, h)) throw std::logic_error("strongly regular construction failed");
  return h;
}

Vector strongly_regular_element(const SlnModel& model) { return model.coords(strongly_regular_matrix(model)); }

std::string to_string(Flavor f) { return f == Flavor::Identity ? "identity" : "transpose"; }

bool is_automorphism_type(int epsilon, Flavor sigma) {
  return (epsilon == 1) == (sigma == Flavor::Identity);
}

Matrix apply_shape(const CanonicalShape& s, const Matrix& x) {
  if (!x.trace().is_zero()) throw std::invalid_argument("matrix is not traceless");
  auto a_inv = inverse(s.a);
  if (!a_inv) throw std::invalid_argument("conjugator is singular");
  const Matrix sx = s.sigma == Flavor::Transpose ? x.transpose() : x;
  return Scalar(s.epsilon) * (s.a * sx * *a_inv);
}

bool shape_is_automorphism(const CanonicalShape& s) { return is_automorphism_type(s.epsilon, s.sigma); }

CanonicalShape compose_shapes(const CanonicalShape& first, const CanonicalShape& second) {
  CanonicalShape out;
  out.epsilon = first.epsilon * second.epsilon;
  out.sigma = first.sigma == second.sigma ? Flavor::Identity : Flavor::Transpose;
  if (second.sigma == Flavor::Identity) {
    out.a = second.a * first.a;
  } else {
    auto inv = inverse(first.a);
    if (!inv) throw std::invalid_argument("conjugator is singular");
    out.a = second.a * inv->transpose();
  }
  return out;
}

Matrix shape_map(const SlnModel& model, const CanonicalShape& s) {
  return model.map_from([&s](const Matrix& x) { return apply_shape(s, x); });
}

std::vector<Matrix> square_zero_spanning_set(const SlnModel& model) {
  const std::size_t n = model.n();
  std::vector<Matrix> out;
  for (auto [i, j] : model.roots()) out.push_back(Matrix::unit(n, i, j));
  // (e_i + e_j)(e_i - e_j)^t: these reach the Cartan directions.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back(Matrix::unit(n, i, i) - Matrix::unit(n, i, j) + Matrix::unit(n, j, i) - Matrix::unit(n, j, j));
  return out;
}

Matrix random_square_zero(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-5, 5);
  while (true) {
    Vector u(n), v(n);
    for (auto& x : u) x = Scalar(dist(rng));
    for (auto& x : v) x = Scalar(dist(rng));
    Scalar uu, vu;
    for (std::size_t k = 0; k < n; ++k) {
      uu += u[k] * u[k];
      vu += v[k] * u[k];
    }
    if (uu.is_zero()) continue;
    const Vector w = uu * v - vu * u;
    if (is_zero(w)) continue;
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = u[i] * w[j];
    return x;
  }
}

SquareZeroReport preserves_square_zero(const SlnModel& model, const Matrix& map, std::size_t trials,
                                       std::uint64_t seed) {
  SquareZeroReport report;
  auto check = [&](const Matrix& x) {
    Matrix y = model.apply(map, x);
    if ((y * y).is_zero()) return true;
    report.preserved = false;
    report.counterexample = x;
    report.image = std::move(y);
    return false;
  };
  for (const auto& x : square_zero_spanning_set(model))
    if (!check(x)) return report;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t)
    if (!check(random_square_zero(model.n(), rng))) return report;
  return report;
}

}  // namespace locaut
