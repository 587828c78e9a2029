#pragma once

// Exact scalars: big rationals, Gaussian rationals a+bi, and univariate
// polynomials over the Gaussian rationals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace locaut {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "a" or "a/b" with optional sign.
  static Rational parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(::abs(q_)); }
  Rational inv() const;
  /// Smallest integer >= this.
  mpz_class ceil() const;
  /// Exact square root when this is the square of a rational.
  std::optional<Rational> sqrt() const;

  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// Element of Q(i): re + im*i. Stands in for the complex field everywhere.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "a/b", "c/d*i", "a/b+c/d*i", "a-i", "i", "-i" (no spaces needed;
  /// spaces are ignored).
  static GaussianRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  /// Throws DivisionByZero for z = 0.
  GaussianRational inv() const;
  /// Error-as-value variant of inv().
  std::optional<GaussianRational> try_inv() const;

  /// A square root in Q(i), if one exists. The returned root has positive
  /// real part, or zero real part and non-negative imaginary part.
  std::optional<GaussianRational> sqrt() const;

  std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

using Scalar = GaussianRational;

inline GaussianRational gr_add(const GaussianRational& a, const GaussianRational& b) { return a + b; }
inline GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b) { return a * b; }
inline GaussianRational gr_inv(const GaussianRational& z) { return z.inv(); }

std::ostream& operator<<(std::ostream& os, const Rational& q);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Polynomial in t with Gaussian rational coefficients, lowest degree first.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);
  Polynomial(Scalar constant);  // NOLINT(google-explicit-constructor)

  static Polynomial t() { return Polynomial({Scalar(0), Scalar(1)}); }
  static Polynomial monomial(std::size_t degree, Scalar coefficient = Scalar(1));
  /// (t - r_1)(t - r_2)...
  static Polynomial from_roots(const std::vector<Scalar>& roots);

  const std::vector<Scalar>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
  Polynomial monic() const;

  Scalar eval(const Scalar& t) const;
  Polynomial pow(unsigned k) const;

  struct DivMod;
  /// Euclidean division. Throws DivisionByZero for a zero divisor.
  DivMod divmod(const Polynomial& divisor) const;
  bool divides(const Polynomial& other) const;

  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Scalar> c_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

inline Scalar poly_eval(const Polynomial& p, const Scalar& t) { return p.eval(t); }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace locaut
