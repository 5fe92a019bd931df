#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

/// Element of Z[i].
struct GaussianInt {
  mpz_class re{0};
  mpz_class im{0};

  GaussianInt() = default;
  GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  GaussianInt(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  bool is_unit() const { return norm() == 1; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator<(const GaussianInt& a, const GaussianInt& b) {
    int c = cmp(a.norm(), b.norm());
    if (c != 0) return c < 0;
    c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }

  /// Multiplication by i^k.
  GaussianInt rotate(int k) const {
    GaussianInt t = *this;
    for (int j = 0; j < ((k % 4) + 4) % 4; ++j) t = GaussianInt(-t.im, t.re);
    return t;
  }

  GaussianRational to_rational() const { return {Rational(re), Rational(im)}; }
  std::string str() const { return to_rational().str(); }
};

/// Integer nearest to x/y for y > 0 (ties round up).
inline mpz_class round_div(const mpz_class& x, const mpz_class& y) {
  mpz_class q;
  mpz_class t = 2 * x + y;
  mpz_class d = 2 * y;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
  return q;
}

/// Euclidean division a = qb + r with N(r) <= N(b)/2.
inline GaussianInt gaussian_div_round(const GaussianInt& a, const GaussianInt& b) {
  mpz_class n = b.norm();
  GaussianInt num = a * b.conj();
  return {round_div(num.re, n), round_div(num.im, n)};
}

inline GaussianInt gaussian_gcd(GaussianInt a, GaussianInt b) {
  while (!b.is_zero()) {
    GaussianInt q = gaussian_div_round(a, b);
    GaussianInt r = a - q * b;
    a = b;
    b = r;
  }
  return a;
}

/// Exact quotient a/b in Z[i]; returns false if b does not divide a.
inline bool gaussian_exact_div(const GaussianInt& a, const GaussianInt& b, GaussianInt& out) {
  mpz_class n = b.norm();
  GaussianInt num = a * b.conj();
  if (num.re % n != 0 || num.im % n != 0) return false;
  out = {num.re / n, num.im / n};
  return true;
}

/// Rotates g into the first quadrant (re > 0, im >= 0); returns (g_norm, k)
/// with g = i^k * g_norm. Each associate class has exactly one such member.
inline std::pair<GaussianInt, int> normalize_first_quadrant(const GaussianInt& g) {
  if (g.is_zero()) throw std::domain_error("cannot normalize zero");
  GaussianInt t = g;
  int rotations = 0;
  while (!(t.re > 0 && t.im >= 0)) {
    t = t.rotate(1);
    if (++rotations > 3) throw std::logic_error("normalization did not terminate");
  }
  return {t, (4 - rotations) % 4};
}

/// Factors n > 0 over Z; trial division then Pollard-Brent rho on what is left.
inline void factor_positive_integer(const mpz_class& n, std::map<mpz_class, long>& out);

namespace detail {

inline mpz_class pollard_rho(const mpz_class& n) {
  // Floyd cycle detection; n composite and odd here.
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    mpz_class diff, a;
    int steps = 0;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle without factor; retry with new c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      if (++steps > 1000000) throw std::runtime_error("integer factorization stalled");
    }
    if (d != 1 && d != n) return d;
  }
}

}  // namespace detail

inline void factor_positive_integer(const mpz_class& n, std::map<mpz_class, long>& out) {
  mpz_class m = n;
  if (m <= 0) throw std::domain_error("factoring a non-positive integer");
  for (mpz_class p : {mpz_class(2), mpz_class(3), mpz_class(5)}) {
    while (m % p == 0) {
      ++out[p];
      m /= p;
    }
  }
  mpz_class p = 7;
  const long wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  int w = 0;
  while (p * p <= m && p < 1000000) {
    while (m % p == 0) {
      ++out[p];
      m /= p;
    }
    p += wheel[w];
    w = (w + 1) % 8;
  }
  if (m == 1) return;
  if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
    ++out[m];
    return;
  }
  mpz_class d = detail::pollard_rho(m);
  factor_positive_integer(d, out);
  factor_positive_integer(m / d, out);
}

/// Smallest c in (0, p) with c^2 = -1 mod p, for a prime p = 1 mod 4.
inline mpz_class sqrt_minus_one_mod(const mpz_class& p) {
  mpz_class exp = (p - 1) / 4;
  for (mpz_class a = 2; a < p; ++a) {
    mpz_class c;
    mpz_powm(c.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    mpz_class c2 = (c * c) % p;
    if (c2 == p - 1) return c;
  }
  throw std::logic_error("no square root of -1 found (input not 1 mod 4?)");
}

/// Unit power of i and first-quadrant primes with (possibly negative) exponents.
/// Recomposing i^unit_exp * prod p^e reproduces the factored value exactly.
struct GaussianFactorization {
  int unit_exp = 0;  // mod 4
  std::vector<std::pair<GaussianInt, long>> factors;  // sorted, exponents nonzero
};

/// The first-quadrant Gaussian primes above a rational prime p.
inline std::vector<GaussianInt> gaussian_primes_above(const mpz_class& p) {
  if (p == 2) return {GaussianInt(1, 1)};
  if (p % 4 == 3) return {GaussianInt(p, 0)};
  mpz_class c = sqrt_minus_one_mod(p);
  GaussianInt pi = gaussian_gcd(GaussianInt(p, 0), GaussianInt(c, 1));
  pi = normalize_first_quadrant(pi).first;
  GaussianInt pibar = normalize_first_quadrant(pi.conj()).first;
  if (pibar < pi) std::swap(pi, pibar);
  return {pi, pibar};
}

/// Factors a nonzero Gaussian integer into first-quadrant primes times i^k.
inline GaussianFactorization factor_gaussian_int(const GaussianInt& g) {
  if (g.is_zero()) throw std::domain_error("factoring zero");
  std::map<mpz_class, long> norm_primes;
  factor_positive_integer(g.norm(), norm_primes);

  GaussianInt rest = g;
  std::map<GaussianInt, long> exps;
  for (const auto& [p, e] : norm_primes) {
    (void)e;
    for (const GaussianInt& pi : gaussian_primes_above(p)) {
      GaussianInt q;
      while (gaussian_exact_div(rest, pi, q)) {
        ++exps[pi];
        rest = q;
      }
    }
  }
  if (!rest.is_unit())
    throw std::logic_error("nontrivial cofactor after prime extraction: " + rest.str());
  auto [one, k] = normalize_first_quadrant(rest);
  if (!(one == GaussianInt(1, 0))) throw std::logic_error("residual unit not normalizable");

  GaussianFactorization f;
  f.unit_exp = k;
  f.factors.assign(exps.begin(), exps.end());
  return f;
}

/// Exact factorization of a nonzero Gaussian rational: numerator factorization
/// minus the denominator's, with units folded together.
inline GaussianFactorization gaussian_factor(const GaussianRational& x) {
  if (x.is_zero()) throw std::domain_error("factoring zero");
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), x.re.get_den().get_mpz_t(), x.im.get_den().get_mpz_t());
  GaussianInt num(x.re.get_num() * (den / x.re.get_den()),
                  x.im.get_num() * (den / x.im.get_den()));

  GaussianFactorization fn = factor_gaussian_int(num);
  std::map<GaussianInt, long> exps(fn.factors.begin(), fn.factors.end());
  int unit = fn.unit_exp;
  if (den != 1) {
    GaussianFactorization fd = factor_gaussian_int(GaussianInt(den, 0));
    unit = ((unit - fd.unit_exp) % 4 + 4) % 4;
    for (const auto& [p, e] : fd.factors) {
      exps[p] -= e;
      if (exps[p] == 0) exps.erase(p);
    }
  }

  GaussianFactorization f;
  f.unit_exp = unit;
  f.factors.assign(exps.begin(), exps.end());
  return f;
}

/// Inverse of gaussian_factor; the recompose-and-compare oracle lives on this.
inline GaussianRational recompose(const GaussianFactorization& f) {
  GaussianRational acc = pow(GaussianRational::i(), f.unit_exp);
  for (const auto& [p, e] : f.factors) acc *= pow(p.to_rational(), e);
  return acc;
}

}  // namespace hopf
