#include "qchan/extremality.hpp"

#include <cmath>

namespace qchan {
namespace {

// Stack {adjoint(A_k)A_l (+) A_l adjoint(A_k)} as rows of an N^2 x 2d^2
// matrix whose numeric rank decides extremality.
ExtremalityReport rank_test(const std::vector<ComplexMatrix>& ops, int dim) {
  const int n_ops = static_cast<int>(ops.size());
  const int d2 = dim * dim;
  ComplexMatrix stack(n_ops * n_ops, 2 * d2);
  std::vector<ComplexMatrix> adj(ops.size());
  for (int i = 0; i < n_ops; ++i) adj[i] = adjoint(ops[i]);
  int row = 0;
  for (int k = 0; k < n_ops; ++k) {
    for (int l = 0; l < n_ops; ++l, ++row) {
      const ComplexMatrix left = adj[k] * ops[l];
      const ComplexMatrix right = ops[l] * adj[k];
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          stack(row, i * dim + j) = left(i, j);
          stack(row, d2 + i * dim + j) = right(i, j);
        }
      }
    }
  }
  ExtremalityReport rep;
  rep.kraus_count = n_ops;
  rep.test_vector_count = n_ops * n_ops;
  rep.ambient_dim = 2 * d2;
  rep.rank = numeric_rank(stack);
  rep.extremal = rep.rank == rep.test_vector_count;
  return rep;
}

}  // namespace

KrausChannel canonical_kraus(const KrausChannel& k, double tol) {
  return kraus_from_choi(to_choi(k), tol);
}

ExtremalityReport landau_streater_extremal(const KrausChannel& k, double tol) {
  if (!is_unital(k, tol)) {
    throw NotUnital("extremality criterion requires a unital channel");
  }
  const KrausChannel canon = canonical_kraus(k);
  return rank_test(canon.kraus, canon.dim);
}

ExtremalityReport tensor_power_extremal(const KrausChannel& k, int n,
                                        double tol, int dim_cap) {
  if (!is_unital(k, tol)) {
    throw NotUnital("extremality criterion requires a unital channel");
  }
  const KrausChannel canon = canonical_kraus(k);
  const KrausChannel powered = tensor_power(canon, n, dim_cap);
  return rank_test(powered.kraus, powered.dim);
}

bool kraus_equivalent(const KrausChannel& a, const KrausChannel& b,
                      double tol) {
  if (a.dim != b.dim) {
    throw DimensionMismatch("comparing channels of different dimension");
  }
  return max_abs_diff(to_choi(a).mat, to_choi(b).mat) <= tol;
}

bool is_symmetric_kraus(const KrausChannel& k, double tol) {
  const KrausChannel canon = canonical_kraus(k);
  for (const auto& a : canon.kraus) {
    if (max_abs_diff(a, transpose(a)) > tol) return false;
  }
  return true;
}

}  // namespace qchan
