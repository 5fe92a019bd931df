#pragma once

#include <complex>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline MultiIndex unit_multi_index(int n, int j) {
  MultiIndex m(n, 0);
  m[j] = 1;
  return m;
}

inline constexpr int kNoDegreeCap = std::numeric_limits<int>::max();

/// Sparse polynomial in n variables over Q(i), keyed by exponent vector.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int n = 0) : n_(n) {}

  int n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, GaussianRational>& terms() const { return terms_; }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  GaussianRational coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational::zero() : it->second;
  }

  void add_term(const MultiIndex& m, const GaussianRational& c) {
    if (static_cast<int>(m.size()) != n_) throw std::invalid_argument("exponent arity mismatch");
    for (int e : m)
      if (e < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static Polynomial monomial(int n, const MultiIndex& m, const GaussianRational& c) {
    Polynomial p(n);
    p.add_term(m, c);
    return p;
  }
  static Polynomial variable(int n, int j) {
    return monomial(n, unit_multi_index(n, j), GaussianRational::one());
  }
  static Polynomial constant(int n, const GaussianRational& c) {
    return monomial(n, MultiIndex(n, 0), c);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend Polynomial operator*(const GaussianRational& c, const Polynomial& a) {
    Polynomial r(a.n_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : a.terms_) r.terms_[m] = c * k;
    return r;
  }

  Polynomial mul(const Polynomial& other, int degree_cap = kNoDegreeCap) const {
    Polynomial r(n_);
    for (const auto& [ma, ca] : terms_) {
      int da = total_degree(ma);
      for (const auto& [mb, cb] : other.terms_) {
        if (degree_cap != kNoDegreeCap && da + total_degree(mb) > degree_cap) continue;
        MultiIndex m(n_);
        for (int j = 0; j < n_; ++j) m[j] = ma[j] + mb[j];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.mul(b); }

  Polynomial pow(int e, int degree_cap = kNoDegreeCap) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = constant(n_, GaussianRational::one());
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) acc = acc.mul(base, degree_cap);
      base = base.mul(base, degree_cap);
      e >>= 1;
    }
    return acc;
  }

  Polynomial truncate(int degree_cap) const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) <= degree_cap) r.terms_[m] = c;
    return r;
  }

  Polynomial derivative(int j) const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
      if (m[j] == 0) continue;
      MultiIndex d = m;
      d[j] -= 1;
      r.add_term(d, Rational(m[j]) * c);
    }
    return r;
  }

  std::complex<double> eval(const std::vector<std::complex<double>>& z) const {
    std::complex<double> acc = 0;
    for (const auto& [m, c] : terms_) {
      std::complex<double> t = c.to_complex();
      for (int j = 0; j < n_; ++j)
        for (int e = 0; e < m[j]; ++e) t *= z[j];
      acc += t;
    }
    return acc;
  }

  GaussianRational eval_exact(const std::vector<GaussianRational>& z) const {
    GaussianRational acc = GaussianRational::zero();
    for (const auto& [m, c] : terms_) {
      GaussianRational t = c;
      for (int j = 0; j < n_; ++j) t *= hopf::pow(z[j], m[j]);
      acc += t;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<MultiIndex, GaussianRational> terms_;
};

/// Polynomial self-map of C^n with exact coefficients.
struct PolyMap {
  int n = 0;
  std::vector<Polynomial> comp;

  PolyMap() = default;
  explicit PolyMap(int dim) : n(dim), comp(dim, Polynomial(dim)) {}

  static PolyMap identity(int n) {
    PolyMap f(n);
    for (int i = 0; i < n; ++i) f.comp[i] = Polynomial::variable(n, i);
    return f;
  }
  static PolyMap diagonal(const std::vector<GaussianRational>& d) {
    PolyMap f(static_cast<int>(d.size()));
    for (int i = 0; i < f.n; ++i)
      f.comp[i] = Polynomial::monomial(f.n, unit_multi_index(f.n, i), d[i]);
    return f;
  }

  int degree() const {
    int d = 0;
    for (const auto& p : comp) d = std::max(d, p.degree());
    return d;
  }

  std::vector<std::complex<double>> eval(const std::vector<std::complex<double>>& z) const {
    std::vector<std::complex<double>> out(n);
    for (int i = 0; i < n; ++i) out[i] = comp[i].eval(z);
    return out;
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.n == b.n && a.comp == b.comp;
  }
};

/// Substitutes g into one polynomial, truncating at the total-degree cap.
inline Polynomial poly_substitute(const Polynomial& f, const PolyMap& g,
                                  int degree_cap = kNoDegreeCap) {
  if (f.n_vars() != g.n) throw std::invalid_argument("dimension mismatch in substitution");
  const int n = g.n;
  // Cache powers of each component as needed.
  std::vector<std::vector<Polynomial>> powers(n);
  for (int j = 0; j < n; ++j) powers[j].push_back(Polynomial::constant(n, GaussianRational::one()));
  auto power_of = [&](int j, int e) -> const Polynomial& {
    while (static_cast<int>(powers[j].size()) <= e)
      powers[j].push_back(powers[j].back().mul(g.comp[j], degree_cap));
    return powers[j][e];
  };
  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (int j = 0; j < n; ++j)
      if (m[j] > 0) t = t.mul(power_of(j, m[j]), degree_cap);
    out = out + t;
  }
  return out;
}

/// f after g, truncated to total degree <= degree_cap.
inline PolyMap poly_compose(const PolyMap& f, const PolyMap& g, int degree_cap = kNoDegreeCap) {
  if (f.n != g.n) throw std::invalid_argument("dimension mismatch in composition");
  if (degree_cap != kNoDegreeCap && degree_cap < 1)
    throw std::invalid_argument("degree cap must be at least 1");
  PolyMap out(f.n);
  for (int i = 0; i < f.n; ++i) out.comp[i] = poly_substitute(f.comp[i], g, degree_cap);
  return out;
}

}  // namespace hopf
