#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qchan/common.hpp"

namespace qchan {

/// Seeded random source.  All distributions are implemented on top of the
/// raw mt19937_64 stream so that equal seeds give bit-identical draws on
/// every platform (std::normal_distribution and friends are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform_pos() {
    return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).  n must be positive.
  int uniform_int(int n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return static_cast<int>(x % un);
  }

  /// Standard normal via Box-Muller (pair cached).
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Complex standard normal: (g1 + i g2) / sqrt(2), unit variance overall.
  cplx complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return cplx(re * 0.70710678118654752440, im * 0.70710678118654752440);
  }

  /// Dirichlet(1,...,1) weights: k nonnegative reals summing to one.
  std::vector<double> dirichlet(int k) {
    std::vector<double> w(k);
    double total = 0.0;
    for (auto& x : w) {
      x = -std::log(uniform_pos());
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }

  /// Fisher-Yates shuffle of 0..n-1.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(p[i], p[uniform_int(i + 1)]);
    }
    return p;
  }

 private:
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace qchan
