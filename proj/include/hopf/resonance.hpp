#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/multipliers.hpp"
#include "hopf/polynomial.hpp"

namespace hopf {

/// Identity lambda_s = lambda^m with m != e_s; indices are 0-based in memory.
struct ResonanceRelation {
  int s = 0;
  MultiIndex m;

  friend bool operator==(const ResonanceRelation& a, const ResonanceRelation& b) {
    return a.s == b.s && a.m == b.m;
  }
  friend bool operator<(const ResonanceRelation& a, const ResonanceRelation& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.m < b.m;
  }
};

/// Inclusive per-component interval for the admissible length |m|.
struct LengthBounds {
  std::vector<int> lo;
  std::vector<int> hi;
};

/// Complete list of resonance relations, ordered by (s, lex m).
struct ResonanceSet {
  std::vector<ResonanceRelation> relations;
  LengthBounds bounds;

  bool contains(int s, const MultiIndex& m) const {
    return std::binary_search(relations.begin(), relations.end(), ResonanceRelation{s, m});
  }
};

/// Length window [lo_s, hi_s] containing every resonance (s; m), from the
/// log-modulus inequalities. Floating logs are widened one unit outward so
/// that rounding can only over-enumerate; membership is decided exactly later.
inline LengthBounds resonance_bounds(const Multipliers& lambda) {
  const int n = lambda.n();
  double log_min = 0, log_max = -std::numeric_limits<double>::infinity();
  // min/max of ln|lambda_i|, i.e. of the smallest and largest modulus.
  std::vector<double> logs(n);
  for (int i = 0; i < n; ++i) {
    logs[i] = 0.5 * std::log(lambda[i].norm().get_d());
    log_min = std::min(log_min, logs[i]);
    log_max = std::max(log_max, logs[i]);
  }
  LengthBounds b;
  b.lo.resize(n);
  b.hi.resize(n);
  for (int s = 0; s < n; ++s) {
    double lo = logs[s] / log_min;  // ln|l_s| / ln|l_smallest|
    double hi = logs[s] / log_max;
    b.lo[s] = std::max(1, static_cast<int>(std::ceil(lo)) - 1);
    b.hi[s] = static_cast<int>(std::floor(hi)) + 1;
  }
  return b;
}

namespace detail {

/// Enumerates all m in N^n with |m| = len, lexicographically ascending.
inline void for_each_multi_index(int n, int len, const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex m(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      m[pos] = left;
      fn(m);
      m[pos] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[pos] = e;
      rec(pos + 1, left - e);
    }
    m[pos] = 0;
  };
  if (n > 0) rec(0, len);
}

}  // namespace detail

/// All resonance relations of lambda, found by exact equality tests inside
/// the proven length window. Deterministic order: s ascending, then lex m.
inline ResonanceSet enumerate_resonances(const Multipliers& lambda) {
  const int n = lambda.n();
  ResonanceSet out;
  out.bounds = resonance_bounds(lambda);
  for (int s = 0; s < n; ++s) {
    const MultiIndex es = unit_multi_index(n, s);
    for (int len = out.bounds.lo[s]; len <= out.bounds.hi[s]; ++len) {
      detail::for_each_multi_index(n, len, [&](const MultiIndex& m) {
        if (m == es) return;
        if (lambda.power(m) == lambda[s]) out.relations.push_back({s, m});
      });
    }
  }
  std::sort(out.relations.begin(), out.relations.end());
  return out;
}

/// Basis symbol of the resonant algebra: the diagonal field Z_j when m = e_j,
/// otherwise the monomial field xi_{s,m}. Construction normalizes xi_{j,e_j}
/// to Z_j so the two spellings compare equal.
struct BasisSymbol {
  int s = 0;
  MultiIndex m;

  BasisSymbol() = default;
  BasisSymbol(int s_, MultiIndex m_) : s(s_), m(std::move(m_)) {}

  static BasisSymbol diagonal(int n, int j) { return {j, unit_multi_index(n, j)}; }

  bool is_diagonal() const { return m == unit_multi_index(static_cast<int>(m.size()), s); }
  int length() const { return total_degree(m); }

  friend bool operator==(const BasisSymbol& a, const BasisSymbol& b) {
    return a.s == b.s && a.m == b.m;
  }
  friend bool operator<(const BasisSymbol& a, const BasisSymbol& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.m < b.m;
  }

  std::string str() const {
    if (is_diagonal()) return "Z" + std::to_string(s + 1);
    std::string t = "xi_{" + std::to_string(s + 1) + ",(";
    for (size_t j = 0; j < m.size(); ++j) t += (j ? "," : "") + std::to_string(m[j]);
    return t + ")}";
  }
};

/// Ordered basis {Z_1..Z_n} then one xi per resonance relation.
inline std::vector<BasisSymbol> basis_descriptor(const Multipliers& lambda,
                                                 const ResonanceSet& res) {
  std::vector<BasisSymbol> basis;
  const int n = lambda.n();
  basis.reserve(n + res.relations.size());
  for (int j = 0; j < n; ++j) basis.push_back(BasisSymbol::diagonal(n, j));
  for (const auto& r : res.relations) basis.emplace_back(r.s, r.m);
  return basis;
}

inline std::vector<BasisSymbol> basis_descriptor(const Multipliers& lambda) {
  return basis_descriptor(lambda, enumerate_resonances(lambda));
}

}  // namespace hopf
