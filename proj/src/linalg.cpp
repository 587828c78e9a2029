#include "locaut/linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace locaut {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix entry count does not match its shape");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Scalar s;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (!v[j].is_zero() && !a(i, j).is_zero()) out[i] += a(i, j) * v[j];
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "]";
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  Vector c = a;
  for (std::size_t k = 0; k < a.size(); ++k) c[k] += b[k];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference length mismatch");
  Vector c = a;
  for (std::size_t k = 0; k < a.size(); ++k) c[k] -= b[k];
  return c;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector c = v;
  for (auto& x : c) x *= s;
  return c;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vector unit_vector(std::size_t dim, std::size_t k) {
  Vector v(dim);
  v[k] = Scalar(1);
  return v;
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Vector& v, std::size_t n) { return Matrix(n, n, v); }

// ---------------------------------------------------------------------------

RowEchelon rref(const Matrix& a) {
  RowEchelon out{a, {}};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Scalar inv = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_linear: rows != len(b)");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RowEchelon e = rref(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_columns[r]] = e.reduced(r, a.cols());
  return x;
}

Subspace kernel(const Matrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(a.cols(), vectors);
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix m = a;
  Scalar prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const RowEchelon e = rref(aug);
  if (e.rank() < n || e.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Polynomial charpoly(const Matrix& x) {
  if (!x.is_square()) throw DimensionMismatch("charpoly of a non-square matrix");
  const std::size_t n = x.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Matrix m(n, n);
  const Matrix id = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = x * m + id * c[n - k + 1];
    c[n - k] = -(x * m).trace() / Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Polynomial> invariant_factors(const Matrix& x) {
  if (!x.is_square()) throw DimensionMismatch("invariant factors of a non-square matrix");
  const std::size_t n = x.rows();
  PolyMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = (i == j ? Polynomial::t() : Polynomial()) - Polynomial(x(i, j));

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Move a nonzero entry of least degree to (k, k).
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m[i][j].is_zero() && (bi == n || m[i][j].degree() < m[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;
      swap_rows(m, k, bi);
      swap_cols(m, k, bj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        const auto qr = m[i][k].divmod(m[k][k]);
        for (std::size_t j = k; j < n; ++j) m[i][j] -= qr.quotient * m[k][j];
        if (!qr.remainder.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero()) continue;
        const auto qr = m[k][j].divmod(m[k][k]);
        for (std::size_t i = k; i < n; ++i) m[i][j] -= qr.quotient * m[i][k];
        if (!qr.remainder.is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide every remaining entry; otherwise fold the
      // offending row into row k and reduce again.
      std::size_t bad_row = n;
      for (std::size_t i = k + 1; i < n && bad_row == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!m[k][k].divides(m[i][j])) {
            bad_row = i;
            break;
          }
      if (bad_row == n) break;
      for (std::size_t j = k; j < n; ++j) m[k][j] += m[bad_row][j];
    }
  }

  std::vector<Polynomial> factors;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) throw std::logic_error("t*1 - x cannot be singular");
    Polynomial d = m[k][k].monic();
    if (d.degree() > 0) factors.push_back(std::move(d));
  }
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  return factors;
}

std::optional<Matrix> similarity_witness(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw DimensionMismatch("similarity_witness needs square matrices of equal size");
  }
  if (x == y) return Matrix::identity(x.rows());
  if (invariant_factors(x) != invariant_factors(y)) return std::nullopt;
  // a x = y a, i.e. pairs (y, x) in the A a = a B convention.
  const Subspace space = intertwiner_space({{y, x}}, x.rows());
  auto a = invertible_element(space, x.rows());
  if (!a) throw std::runtime_error("similar matrices but no invertible intertwiner within the search cutoff");
  return a;
}

Subspace intertwiner_space(const IntertwinerPairs& pairs, std::size_t n) {
  const std::size_t unknowns = n * n;
  if (pairs.empty()) return Subspace::full(unknowns);
  Matrix system(pairs.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& [a, b] : pairs) {
    if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
      throw DimensionMismatch("intertwiner pair of the wrong size");
    }
    // Row (i, j): sum_k A_ik a_kj - sum_k a_ik B_kj = 0.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          if (!a(i, k).is_zero()) system(row, k * n + j) += a(i, k);
          if (!b(k, j).is_zero()) system(row, i * n + k) -= b(k, j);
        }
      }
    }
  }
  return kernel(system);
}

namespace {

Matrix combine(const Subspace& space, const std::vector<long>& coeffs, std::size_t n) {
  Vector acc(space.ambient_dim());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) acc = acc + Scalar(coeffs[k]) * space.basis()[k];
  }
  return unflatten(acc, n);
}

// Visits {0..n}^dim in lexicographic order, skipping the origin.
std::optional<Matrix> grid_search(const Subspace& space, std::size_t n, std::size_t cutoff) {
  const std::size_t dim = space.dim();
  std::vector<long> point(dim, 0);
  for (std::size_t visited = 0; visited < cutoff; ++visited) {
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (point[k] < static_cast<long>(n)) {
        ++point[k];
        break;
      }
      point[k] = 0;
      if (k == 0) return std::nullopt;
    }
    Matrix m = combine(space, point, n);
    if (!determinant(m).is_zero()) return m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Matrix> invertible_element(const Subspace& space, std::size_t n) {
  if (space.ambient_dim() != n * n) throw DimensionMismatch("invertible_element: ambient dim must be n^2");
  if (space.dim() == 0) return std::nullopt;
  if (space.dim() == 1) {
    Matrix m = unflatten(space.basis()[0], n);
    if (determinant(m).is_zero()) return std::nullopt;
    return m;
  }
  if (space.dim() <= 3) return grid_search(space, n, kGridCutoff);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<long> dist(-16, 16);
  std::vector<long> coeffs(space.dim());
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& c : coeffs) c = dist(rng);
    Matrix m = combine(space, coeffs, n);
    if (!determinant(m).is_zero()) return m;
  }
  return grid_search(space, n, kGridCutoff);
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw DimensionMismatch("spanning vector of the wrong length");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  }
  const RowEchelon e = rref(m);
  for (std::size_t r = 0; r < e.rank(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = e.pivot_columns;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < ambient_dim; ++k) vs.push_back(unit_vector(ambient_dim, k));
  return span(ambient_dim, vs);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector of the wrong length for subspace");
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = r[pivots_[k]];
    if (!c.is_zero()) r = r - c * basis_[k];
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::join(const Subspace& other) const {
  std::vector<Vector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve sum a_i u_i - sum b_j w_j = 0; the intersection is {sum a_i u_i}.
  const std::size_t p = dim(), q = other.dim();
  if (p == 0 || q == 0) return Subspace(ambient_);
  Matrix m(ambient_, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, p + j) = -other.basis_[j][r];
  std::vector<Vector> vs;
  const Subspace solutions = kernel(m);
  for (const auto& sol : solutions.basis()) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < p; ++i)
      if (!sol[i].is_zero()) v = v + sol[i] * basis_[i];
    vs.push_back(std::move(v));
  }
  return span(ambient_, vs);
}

}  // namespace locaut
