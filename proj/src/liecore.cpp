#include "locaut/liecore.hpp"

#include <stdexcept>

namespace locaut {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Lie: return "Lie";
    case AlgebraKind::Leibniz: return "Leibniz";
    case AlgebraKind::Unchecked: return "Unchecked";
  }
  return "Unchecked";
}

StructureAlgebra::StructureAlgebra(std::size_t dim, std::vector<std::string> labels, AlgebraKind kind)
    : dim_(dim), labels_(std::move(labels)), kind_(kind), table_(dim * dim, Vector(dim)) {
  if (labels_.empty()) {
    for (std::size_t k = 0; k < dim; ++k) labels_.push_back("e" + std::to_string(k + 1));
  }
  if (labels_.size() != dim) throw DimensionMismatch("label count must equal the dimension");
}

void StructureAlgebra::set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index");
  table_[i * dim_ + j][k] = std::move(value);
}

void StructureAlgebra::set_basis_bracket(std::size_t i, std::size_t j, Vector value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("structure constant index");
  if (value.size() != dim_) throw DimensionMismatch("bracket value of the wrong length");
  table_[i * dim_ + j] = std::move(value);
}

Vector StructureAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("element does not belong to this algebra");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& c = table_[i * dim_ + j];
      Scalar w;
      bool have_w = false;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c[k].is_zero()) continue;
        if (!have_w) {
          w = x[i] * y[j];
          have_w = true;
        }
        out[k] += w * c[k];
      }
    }
  }
  return out;
}

std::vector<IdentityViolation> validate(const StructureAlgebra& alg, AlgebraKind kind) {
  std::vector<IdentityViolation> out;
  const std::size_t n = alg.dim();
  auto e = [n](std::size_t k) { return unit_vector(n, k); };
  if (kind == AlgebraKind::Unchecked) return out;
  if (kind == AlgebraKind::Lie) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Vector s = alg.basis_bracket(i, j) + alg.basis_bracket(j, i);
        if (i == j) s = alg.basis_bracket(i, i);
        if (!is_zero(s)) out.push_back({"antisymmetry", i, j, j, s});
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          Vector d = alg.bracket(e(i), alg.basis_bracket(j, k)) + alg.bracket(e(j), alg.basis_bracket(k, i)) +
                     alg.bracket(e(k), alg.basis_bracket(i, j));
          if (!is_zero(d)) out.push_back({"jacobi", i, j, k, d});
        }
    return out;
  }
  // [x,[y,z]] = [[x,y],z] - [[x,z],y]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = alg.bracket(e(i), alg.basis_bracket(j, k)) - alg.bracket(alg.basis_bracket(i, j), e(k)) +
                   alg.bracket(alg.basis_bracket(i, k), e(j));
        if (!is_zero(d)) out.push_back({"leibniz", i, j, k, d});
      }
  return out;
}

Subspace bracket_span(const StructureAlgebra& alg, const Subspace& u, const Subspace& v) {
  std::vector<Vector> vs;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) {
      Vector b = alg.bracket(x, y);
      if (!is_zero(b)) vs.push_back(std::move(b));
    }
  return Subspace::span(alg.dim(), vs);
}

Subspace squares_ideal(const StructureAlgebra& alg) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i; j < alg.dim(); ++j) {
      Vector s = i == j ? alg.basis_bracket(i, i) : alg.basis_bracket(i, j) + alg.basis_bracket(j, i);
      if (!is_zero(s)) vs.push_back(std::move(s));
    }
  return Subspace::span(alg.dim(), vs);
}

Quotient quotient(const StructureAlgebra& alg, const Subspace& ideal) {
  const std::size_t n = alg.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  Quotient q;
  for (std::size_t k = 0; k < n; ++k)
    if (!pivot[k]) q.kept.push_back(k);
  const std::size_t m = q.kept.size();

  // Reducing against the RREF basis kills pivot coordinates; what remains on
  // the kept coordinates is the class of the vector.
  q.projection = Matrix(m, n);
  for (std::size_t col = 0; col < n; ++col) {
    const Vector r = ideal.reduce(unit_vector(n, col));
    for (std::size_t a = 0; a < m; ++a) q.projection(a, col) = r[q.kept[a]];
  }

  std::vector<std::string> labels;
  for (auto k : q.kept) labels.push_back(alg.labels()[k]);
  q.algebra = StructureAlgebra(m, labels, AlgebraKind::Unchecked);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q.algebra.set_basis_bracket(a, b, q.projection * alg.basis_bracket(q.kept[a], q.kept[b]));
  return q;
}

Quotient liezation(const StructureAlgebra& alg) {
  Quotient q = quotient(alg, squares_ideal(alg));
  if (validate(q.algebra, AlgebraKind::Lie).empty()) q.algebra.set_kind(AlgebraKind::Lie);
  return q;
}

std::vector<Subspace> lower_central_series(const StructureAlgebra& alg) {
  const Subspace whole = Subspace::full(alg.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_span(alg, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

Subspace center(const StructureAlgebra& alg) {
  const std::size_t n = alg.dim();
  // x central iff [x, e_j] = 0 and [e_j, x] = 0 for all j; both are linear in x.
  Matrix system(2 * n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        system(j * n + k, i) = alg.constant(i, j, k);
        system(n * n + j * n + k, i) = alg.constant(j, i, k);
      }
  return kernel(system);
}

bool is_nilpotent(const StructureAlgebra& alg) { return lower_central_series(alg).back().dim() == 0; }

bool is_filiform(const StructureAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (n < 2 || !is_nilpotent(alg)) return false;
  const auto series = lower_central_series(alg);
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    const std::size_t expected = n - k - 1;
    const std::size_t actual = k < series.size() ? series[k].dim() : 0;
    if (actual != expected) return false;
  }
  return true;
}

AdaptedBasisReport check_adapted_filiform_basis(const StructureAlgebra& alg) {
  AdaptedBasisReport report;
  const std::size_t n = alg.dim();
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.problems.push_back(std::move(msg));
  };
  if (n < 3) {
    fail("dimension below 3");
    return report;
  }
  // 0-based: e_1 -> 0, e_i -> i-1.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (alg.basis_bracket(0, i) != unit_vector(n, i + 1)) {
      fail("[e1, e" + std::to_string(i + 1) + "] != e" + std::to_string(i + 2));
    }
  }
  for (std::size_t i = 2; i < n; ++i) {
    if (!is_zero(alg.basis_bracket(i, n - 2))) {
      fail("[e" + std::to_string(i + 1) + ", e" + std::to_string(n - 1) + "] != 0");
    }
  }
  if (!center(alg).contains(unit_vector(n, n - 1))) fail("e" + std::to_string(n) + " is not central");
  return report;
}

namespace {

std::optional<BracketFailure> morphism_failure(const StructureAlgebra& alg, const Matrix& map, bool reversed) {
  const std::size_t n = alg.dim();
  if (map.rows() != n || map.cols() != n) throw DimensionMismatch("map size does not match the algebra");
  std::vector<Vector> images;
  for (std::size_t k = 0; k < n; ++k) images.push_back(map.column(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector expected = map * alg.basis_bracket(i, j);
      Vector actual = reversed ? alg.bracket(images[j], images[i]) : alg.bracket(images[i], images[j]);
      if (expected != actual) return BracketFailure{i, j, std::move(expected), std::move(actual)};
    }
  return std::nullopt;
}

}  // namespace

std::optional<BracketFailure> find_homomorphism_failure(const StructureAlgebra& alg, const Matrix& map) {
  return morphism_failure(alg, map, false);
}

std::optional<BracketFailure> find_antihomomorphism_failure(const StructureAlgebra& alg, const Matrix& map) {
  return morphism_failure(alg, map, true);
}

bool is_automorphism(const StructureAlgebra& alg, const Matrix& map) {
  return !determinant(map).is_zero() && !find_homomorphism_failure(alg, map);
}

}  // namespace locaut
