#pragma once

#include <stdexcept>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

/// Dense square/rectangular matrix over Q(i), row-major.
using Matrix = std::vector<std::vector<GaussianRational>>;

inline Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<GaussianRational>(n, GaussianRational::zero()));
  for (int i = 0; i < n; ++i) m[i][i] = GaussianRational::one();
  return m;
}

inline Matrix matrix_mul(const Matrix& a, const Matrix& b) {
  const size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Matrix out(r, std::vector<GaussianRational>(c, GaussianRational::zero()));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

inline Matrix matrix_sub(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

inline bool matrix_is_zero(const Matrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

/// Rank over Q(i) by exact Gaussian elimination.
inline int matrix_rank(Matrix a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int i = rank; i < rows; ++i)
      if (!a[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[rank], a[sel]);
    GaussianRational inv = a[rank][col].inverse();
    for (int j = col; j < cols; ++j) a[rank][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      GaussianRational f = a[i][col];
      for (int j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline int kernel_dimension(const Matrix& a) {
  if (a.empty()) return 0;
  return static_cast<int>(a[0].size()) - matrix_rank(a);
}

/// Dense univariate polynomial over Q(i); coeffs[k] multiplies x^k.
struct UPoly {
  std::vector<GaussianRational> coeffs;

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs.empty(); }

  UPoly derivative() const {
    UPoly d;
    for (size_t k = 1; k < coeffs.size(); ++k) d.coeffs.push_back(Rational(long(k)) * coeffs[k]);
    d.trim();
    return d;
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    UPoly m = *this;
    GaussianRational inv = coeffs.back().inverse();
    for (auto& c : m.coeffs) c *= inv;
    return m;
  }
};

/// Remainder of a by b (b nonzero), standard long division.
inline UPoly upoly_rem(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  GaussianRational lead_inv = b.coeffs.back().inverse();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    GaussianRational f = a.coeffs.back() * lead_inv;
    int shift = a.degree() - b.degree();
    for (int k = 0; k <= b.degree(); ++k) a.coeffs[k + shift] -= f * b.coeffs[k];
    a.trim();
  }
  return a;
}

/// Quotient of a by b when the division is exact; throws otherwise.
inline UPoly upoly_exact_div(UPoly a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UPoly q;
  q.coeffs.assign(std::max(0, a.degree() - b.degree() + 1), GaussianRational::zero());
  GaussianRational lead_inv = b.coeffs.back().inverse();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    GaussianRational f = a.coeffs.back() * lead_inv;
    int shift = a.degree() - b.degree();
    q.coeffs[shift] = f;
    for (int k = 0; k <= b.degree(); ++k) a.coeffs[k + shift] -= f * b.coeffs[k];
    a.trim();
  }
  if (!a.is_zero()) throw std::domain_error("inexact polynomial division");
  q.trim();
  return q;
}

/// Monic gcd by the Euclidean algorithm.
inline UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = upoly_rem(a, b);
    a = b;
    b = r;
  }
  return a.monic();
}

/// Characteristic polynomial (monic) via the Faddeev-LeVerrier recursion.
inline UPoly characteristic_polynomial(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  UPoly p;
  p.coeffs.assign(n + 1, GaussianRational::zero());
  p.coeffs[n] = GaussianRational::one();
  Matrix m = identity_matrix(n);
  GaussianRational c = GaussianRational::one();
  for (int k = 1; k <= n; ++k) {
    m = matrix_mul(a, m);
    GaussianRational tr = GaussianRational::zero();
    for (int i = 0; i < n; ++i) tr += m[i][i];
    c = Rational(-1, k) * tr;
    // p coefficient of x^{n-k} is c_k
    p.coeffs[n - k] = c;
    for (int i = 0; i < n; ++i) m[i][i] += c;
  }
  return p;
}

/// p(A) by Horner evaluation with matrix arguments.
inline Matrix upoly_eval_matrix(const UPoly& p, const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Matrix acc(n, std::vector<GaussianRational>(n, GaussianRational::zero()));
  for (int k = p.degree(); k >= 0; --k) {
    acc = matrix_mul(acc, a);
    for (int i = 0; i < n; ++i) acc[i][i] += p.coeffs[k];
  }
  return acc;
}

/// True iff the matrix is diagonalizable over the algebraic closure,
/// decided exactly: the squarefree part of the characteristic polynomial
/// must annihilate the matrix.
inline bool is_diagonalizable(const Matrix& a) {
  UPoly p = characteristic_polynomial(a);
  UPoly g = upoly_gcd(p, p.derivative());
  UPoly radical = g.degree() <= 0 ? p : upoly_exact_div(p, g);
  return matrix_is_zero(upoly_eval_matrix(radical, a));
}

}  // namespace hopf
