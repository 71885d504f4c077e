#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qchan/channel.hpp"

namespace qchan {

struct LawReport {
  std::string law_name;
  double max_deviation = 0.0;
  int samples = 0;
  bool passed = false;
  double tolerance = kEqTol;
};

/// Unit law: Choi of compose(t, id) and compose(id, t) against Choi of t,
/// plus `samples` random-state spot checks folded into the deviation.
LawReport check_identity_law(const KrausChannel& t, int samples,
                             std::uint64_t seed, double tol = kEqTol);

/// Choi of compose(v, compose(t, r)) against compose(compose(v, t), r).
LawReport check_associativity(const KrausChannel& r, const KrausChannel& t,
                              const KrausChannel& v, double tol = kEqTol);

/// Tensor bifunctor law on random state pairs:
/// kron(t(rho), s(sigma)) = (t (x) s)(kron(rho, sigma)).
LawReport check_bifunctor_law(const KrausChannel& t, const KrausChannel& s,
                              int samples, std::uint64_t seed,
                              double tol = kEqTol);

/// Image of the identity under the n-th tensor power of a unital channel.
LawReport check_unitality_power(const KrausChannel& t, int n,
                                double tol = kEqTol,
                                int dim_cap = kDimensionCap);

/// n(n+1)/2: copies of the base channel across the chain of tensor-power
/// categories, level k carrying k copies.
long long chain_copy_count(int n);

}  // namespace qchan
