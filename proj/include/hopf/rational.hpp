#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopf {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational (q > 0, lowest terms).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational string: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_str(const Rational& r) { return r.get_str(); }

/// Element of Q(i), kept componentwise canonical.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(long r, long i) : re(r), im(i) {}

  static GaussianRational zero() { return GaussianRational(0); }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational i() { return GaussianRational(0, 1); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// Squared modulus |x|^2 = re^2 + im^2, exact.
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& c, const GaussianRational& a) {
    return {c * a.re, c * a.im};
  }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    Rational n = norm();
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Lexicographic order on (re, im); used only as a container key.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  std::string str() const {
    if (im == 0) return rational_str(re);
    std::string s = rational_str(re);
    s += (im > 0 ? "+" : "-");
    Rational a = abs(im);
    if (a != 1) s += rational_str(a) + "*";
    s += "i";
    return s;
  }
};

/// x^e with e possibly negative (x != 0 required for e < 0).
inline GaussianRational pow(const GaussianRational& x, long e) {
  GaussianRational base = x;
  if (e < 0) {
    base = x.inverse();
    e = -e;
  }
  GaussianRational acc = GaussianRational::one();
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace hopf
