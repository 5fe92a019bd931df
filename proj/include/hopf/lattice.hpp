#pragma once

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace hopf {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;  // row-major, rows may be empty

/// Basis of a sublattice of Z^n; vectors are primitive and Q-independent.
struct IntegerLattice {
  int n = 0;
  std::vector<IntVector> basis;

  int rank() const { return static_cast<int>(basis.size()); }
};

namespace detail {

/// In-place unimodular row elimination of A, mirrored on U.
/// Returns the row rank of A.
inline int row_echelon_unimodular(IntMatrix& A, IntMatrix& U) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(A[0].size());
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < rows; ++i)
      if (A[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(A[pivot_row], A[sel]);
    std::swap(U[pivot_row], U[sel]);
    for (int j = pivot_row + 1; j < rows; ++j) {
      if (A[j][col] == 0) continue;
      mpz_class a = A[pivot_row][col], b = A[j][col];
      mpz_class g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_class ar = a / g, br = b / g;
      // [[p, q], [-br, ar]] has determinant 1 and sends (a, b) to (g, 0).
      for (int k = 0; k < cols; ++k) {
        mpz_class x = A[pivot_row][k], y = A[j][k];
        A[pivot_row][k] = p * x + q * y;
        A[j][k] = ar * y - br * x;
      }
      for (size_t k = 0; k < U[0].size(); ++k) {
        mpz_class x = U[pivot_row][k], y = U[j][k];
        U[pivot_row][k] = p * x + q * y;
        U[j][k] = ar * y - br * x;
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace detail

/// Rank of an integer matrix over Q, computed without fractions.
inline int integer_rank(const IntMatrix& M) {
  if (M.empty()) return 0;
  IntMatrix A = M;
  IntMatrix U(A.size(), IntVector(1, 0));  // dummy mirror
  return detail::row_echelon_unimodular(A, U);
}

/// Kernel {m in Z^n : Mm = 0} as a primitive lattice basis.
/// M has rows of length n; an empty M yields all of Z^n.
inline IntegerLattice lattice_kernel(const IntMatrix& M, int n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("ragged matrix row");

  // Row-reduce M^T while mirroring on an identity; rows of the mirror that
  // face a zero row of the reduced M^T span the kernel.
  IntMatrix At(n, IntVector(M.size(), 0));
  for (size_t i = 0; i < M.size(); ++i)
    for (int j = 0; j < n; ++j) At[j][i] = M[i][j];
  if (M.empty()) At.assign(n, IntVector());

  IntMatrix U(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) U[i][i] = 1;

  int rank = detail::row_echelon_unimodular(At, U);

  IntegerLattice L;
  L.n = n;
  for (int i = rank; i < n; ++i) {
    IntVector v = U[i];
    // Rows of a unimodular matrix are already primitive; normalize the sign
    // and divide by the content anyway so the output contract is local.
    mpz_class content = 0;
    for (const auto& x : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    if (content > 1)
      for (auto& x : v) x /= content;
    for (const auto& x : v)
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
    L.basis.push_back(std::move(v));
  }
  return L;
}

/// Mv for a row-major M.
inline IntVector matrix_apply(const IntMatrix& M, const IntVector& v) {
  IntVector out(M.size(), 0);
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += M[i][j] * v[j];
  return out;
}

}  // namespace hopf
