#pragma once

#include <cstdint>
#include <vector>

#include "qchan/matrix.hpp"

namespace qchan {

/// Bijection on {0..n-1}; map[j] = sigma(j).
struct Permutation {
  int n = 0;
  std::vector<int> map;

  explicit Permutation(std::vector<int> m);
  static Permutation identity(int n);
};

/// n x n matrix with 1 at (j, sigma(j)).
ComplexMatrix perm_matrix(const Permutation& p);

/// Real, nonnegative, with unit row and column sums at tol.  Throws NotSquare
/// for non-square input.
bool is_doubly_stochastic(const ComplexMatrix& m, double tol = kEqTol);

/// Validated doubly stochastic matrix.
struct DoublyStochasticMatrix {
  int n = 0;
  ComplexMatrix mat;

  explicit DoublyStochasticMatrix(ComplexMatrix m, double tol = kEqTol);
};

struct BirkhoffDecomposition {
  std::vector<std::pair<double, Permutation>> terms;
  double reconstruction_error = 0.0;  // achieved max-entry error
  double tol = 0.0;                   // tolerance the run was asked for

  ComplexMatrix reconstruct(int n) const;
};

/// Greedy matching-based decomposition: repeatedly extracts a permutation
/// supported on entries > tol (lowest-index-first Hopcroft-Karp), subtracts
/// the minimal entry along it, and stops when the residual max entry is
/// <= tol.  Weights are normalized to sum to one; term count is bounded by
/// (n-1)^2 + 1.  Throws NoPerfectMatching when the support has no perfect
/// matching, which means the input was not doubly stochastic beyond tol.
BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& d,
                                         double tol = kEqTol);

/// Convex combination of k uniform random permutations with Dirichlet
/// weights; deterministic per seed.
DoublyStochasticMatrix random_doubly_stochastic(int n, int k,
                                                std::uint64_t seed);

}  // namespace qchan
