#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the elimination or recurrence code under test.

#include <random>
#include <vector>

#include "locaut/exactnum.hpp"
#include "locaut/linalg.hpp"

namespace oracle {

using locaut::Matrix;
using locaut::Polynomial;
using locaut::Scalar;
using locaut::Vector;

template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(Scalar(1));
  if (n == 1) return m[0][0];
  T acc{};
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    T term = m[0][c] * cofactor_det(minor);
    if (c % 2 == 0) acc = acc + term;
    else acc = acc - term;
  }
  return acc;
}

/// Laplace expansion along the last row, memoized over column subsets.
inline Scalar det(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Scalar> f(std::size_t{1} << n);
  f[0] = Scalar(1);
  for (std::size_t mask = 1; mask < f.size(); ++mask) {
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    Scalar acc(0);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      if (!a(row, c).is_zero() && !f[mask & ~(std::size_t{1} << c)].is_zero()) {
        const Scalar term = a(row, c) * f[mask & ~(std::size_t{1} << c)];
        acc = (row + rank) % 2 == 0 ? acc + term : acc - term;
      }
      ++rank;
    }
    f[mask] = acc;
  }
  return f.back();
}

/// det(t*1 - x) by Laplace expansion over the polynomial ring.
inline Polynomial charpoly(const Matrix& x) {
  const std::size_t n = x.rows();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Polynomial(-x(i, j));
      if (i == j) m[i][j] = m[i][j] + Polynomial::t();
    }
  return cofactor_det(m);
}


/// Inverse as adjugate over det; a must be invertible.
inline Matrix inverse(const Matrix& a) {
  const std::size_t n = a.rows();
  const Scalar d = det(a);
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      const Scalar cof = n == 1 ? Scalar(1) : det(minor);
      out(i, j) = (i + j) % 2 == 0 ? cof / d : -cof / d;
    }
  return out;
}

/// rho(g) on V(m) from the textbook formulas, for g = a h + b e + c f.
inline Matrix rho_sl2(std::size_t m, const Scalar& a, const Scalar& b, const Scalar& c) {
  const std::size_t d = m + 1;
  Matrix r(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    r(k, k) = a * Scalar(static_cast<long>(m) - 2 * static_cast<long>(k));
    if (k > 0) r(k - 1, k) = b * Scalar(static_cast<long>(m - k + 1));
    if (k + 1 < d) r(k + 1, k) = c * Scalar(static_cast<long>(k + 1));
  }
  return r;
}

/// [(g1, v1), (g2, v2)] = ([g1, g2], -rho(g2) v1) on sl_2 + V(m), basis e12, e21, h, v_0..v_m.
inline Vector oracle_bracket(std::size_t m, const Vector& x, const Vector& y) {
  const Matrix g1{{x[2], x[0]}, {x[1], -x[2]}};
  const Matrix g2{{y[2], y[0]}, {y[1], -y[2]}};
  const Matrix g = g1 * g2 - g2 * g1;
  const Vector v1(x.begin() + 3, x.end());
  const Vector w = (-rho_sl2(m, y[2], y[0], y[1])) * v1;
  Vector out{g(0, 1), g(1, 0), g(0, 0)};
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// [e_1, e_i] = e_{i+1} and its negative, 0-based coordinates.
inline Vector filiform_bracket(const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  Vector out(n);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i + 1] = x[0] * y[i] - y[0] * x[i];
  return out;
}

inline Scalar random_scalar(std::mt19937_64& rng, long bound = 9, bool gaussian = true) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  locaut::Rational re(num(rng), den(rng));
  if (!gaussian) return Scalar(re);
  return Scalar(re, locaut::Rational(num(rng), den(rng)));
}

inline Matrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 5) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(dist(rng));
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, long bound = 3) {
  while (true) {
    Matrix m = random_integer_matrix(rng, n, n, bound);
    if (!det(m).is_zero()) return m;
  }
}

inline Matrix random_traceless(std::mt19937_64& rng, std::size_t n, long bound = 5) {
  Matrix m = random_integer_matrix(rng, n, n, bound);
  Scalar tr = m.trace();
  m(n - 1, n - 1) -= tr;
  return m;
}

/// True when a = mu * b for some nonzero scalar mu.
inline bool scalar_multiple(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::optional<Scalar> mu;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    const Scalar& x = a.entries()[k];
    const Scalar& y = b.entries()[k];
    if (y.is_zero()) {
      if (!x.is_zero()) return false;
      continue;
    }
    Scalar r = x / y;
    if (mu && *mu != r) return false;
    mu = r;
  }
  return mu && !mu->is_zero();
}

}  // namespace oracle
