#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

/// Eigenvalue vector of a holomorphic contraction germ: n >= 2 entries of
/// Q(i)*, each strictly inside the unit disk (checked exactly on |.|^2).
class Multipliers {
 public:
  explicit Multipliers(std::vector<GaussianRational> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2) throw std::invalid_argument("need at least two multipliers");
    for (size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].is_zero())
        throw std::invalid_argument("multiplier " + std::to_string(i + 1) + " is zero");
      if (!(entries_[i].norm() < 1))
        throw std::invalid_argument("multiplier " + std::to_string(i + 1) +
                                    " is not a contraction (|lambda|^2 >= 1)");
    }
  }

  int n() const { return static_cast<int>(entries_.size()); }
  const GaussianRational& operator[](int i) const { return entries_[i]; }
  const std::vector<GaussianRational>& entries() const { return entries_; }

  /// lambda^m for an integer exponent vector, exact.
  GaussianRational power(const std::vector<int>& m) const {
    GaussianRational acc = GaussianRational::one();
    for (int i = 0; i < n(); ++i) acc *= pow(entries_[i], m[i]);
    return acc;
  }

  friend bool operator==(const Multipliers& a, const Multipliers& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<GaussianRational> entries_;
};

}  // namespace hopf
