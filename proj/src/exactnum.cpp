#include "locaut/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace locaut {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

std::optional<mpz_class> exact_isqrt(const mpz_class& v) {
  if (v < 0) return std::nullopt;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  const std::string_view view(s);
  if (slash == std::string::npos) {
    if (!parse_integer(view, num)) throw std::invalid_argument("malformed rational: '" + s + "'");
  } else {
    if (!parse_integer(view.substr(0, slash), num) || !parse_integer(view.substr(slash + 1), den) ||
        den < 0) {
      throw std::invalid_argument("malformed rational: '" + s + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  auto n = exact_isqrt(num());
  auto d = exact_isqrt(den());
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

std::string Rational::str() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::optional<GaussianRational> GaussianRational::try_inv() const {
  if (is_zero()) return std::nullopt;
  return inv();
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
  // (x + iy)^2 = a + bi  <=>  x^2 - y^2 = a, 2xy = b, with x^2 + y^2 = |z|.
  if (is_zero()) return GaussianRational();
  auto modulus = norm().sqrt();
  if (!modulus) return std::nullopt;
  auto x = ((*modulus + re_) / Rational(2)).sqrt();
  auto y = ((*modulus - re_) / Rational(2)).sqrt();
  if (!x || !y) return std::nullopt;
  Rational ys = *y;
  if (!x->is_zero() && im_.sign() < 0) ys = -ys;
  GaussianRational root(*x, ys);
  if (root * root != *this) return std::nullopt;
  return root;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  const bool imaginary = s.back() == 'i';
  if (!imaginary) return GaussianRational(Rational::parse(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string real_part;
  std::string imag_part = s;
  if (split != std::string::npos) {
    real_part = s.substr(0, split);
    imag_part = s.substr(split);
  }
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";
  Rational re = real_part.empty() ? Rational(0) : Rational::parse(real_part);
  return {re, Rational::parse(imag_part)};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag = im_.abs().str() + "*i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(Scalar constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial Polynomial::monomial(std::size_t degree, Scalar coefficient) {
  std::vector<Scalar> c(degree + 1);
  c[degree] = std::move(coefficient);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<Scalar>& roots) {
  Polynomial p(Scalar(1));
  for (const auto& r : roots) p = p * Polynomial({-r, Scalar(1)});
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Scalar lead_inv = leading().inv();
  std::vector<Scalar> c = c_;
  for (auto& x : c) x *= lead_inv;
  return Polynomial(std::move(c));
}

Scalar Polynomial::eval(const Scalar& t) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(Scalar(1));
  for (unsigned j = 0; j < k; ++j) result = result * *this;
  return result;
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  std::vector<Scalar> rem = c_;
  const int dd = divisor.degree();
  const int qdeg = degree() - dd;
  std::vector<Scalar> quot(qdeg >= 0 ? static_cast<std::size_t>(qdeg + 1) : 0);
  const Scalar lead_inv = divisor.leading().inv();
  for (int k = qdeg; k >= 0; --k) {
    const Scalar factor = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * divisor.c_[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).remainder.is_zero();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> c = c_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& a = c_[k];
    if (a.is_zero()) continue;
    std::string coeff = a.str();
    const bool compound = !a.is_real() && !a.re().is_zero();
    bool negative = !compound && !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (compound) coeff = "(" + coeff + ")";
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    first = false;
    if (k == 0) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << coeff << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace locaut
