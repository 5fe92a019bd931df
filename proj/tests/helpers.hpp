#pragma once

#include <random>
#include <vector>

#include "hopf/multipliers.hpp"
#include "hopf/polynomial.hpp"
#include "hopf/rational.hpp"

namespace hopf::testing {

inline GaussianRational random_gaussian_rational(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  while (true) {
    Rational re(num(rng), den(rng));
    Rational im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    GaussianRational x(re, im);
    if (allow_zero || !x.is_zero()) return x;
  }
}

/// Random sparse map with terms of total degree in [1, max_deg].
inline PolyMap random_poly_map(std::mt19937_64& rng, int n, int max_deg, int terms_per_comp) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  PolyMap f(n);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < terms_per_comp; ++t) {
      int d = deg(rng);
      MultiIndex m(n, 0);
      std::uniform_int_distribution<int> var(0, n - 1);
      for (int k = 0; k < d; ++k) m[var(rng)] += 1;
      f.comp[i].add_term(m, random_gaussian_rational(rng));
    }
  }
  return f;
}

/// Multipliers assembled from powers of small Gaussian primes, so that
/// multiplicative relations are common; always strict contractions.
inline Multipliers random_prime_power_multipliers(std::mt19937_64& rng, int n) {
  static const std::vector<GaussianRational> primes = {
      GaussianRational(1, 1),   // 1+i, norm 2
      GaussianRational(2, 1),   // 2+i, norm 5
      GaussianRational(1, 2),   // 1+2i, norm 5
      GaussianRational(3, 0),   // inert, norm 9
  };
  std::uniform_int_distribution<int> unit(0, 3);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(primes.size()) - 1);
  std::vector<GaussianRational> entries;
  for (int i = 0; i < n; ++i) {
    while (true) {
      GaussianRational x = pow(GaussianRational::i(), unit(rng));
      x *= pow(primes[pick(rng)], -(1 + exp(rng)));
      int extra = exp(rng);
      for (int j = 0; j < extra; ++j) x *= pow(primes[pick(rng)], -1);
      if (x.norm() < 1) {
        entries.push_back(x);
        break;
      }
    }
  }
  return Multipliers(entries);
}

}  // namespace hopf::testing
