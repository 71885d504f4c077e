#pragma once

#include "qchan/channel.hpp"

namespace qchan {

/// Outcome of the Landau-Streater linear-independence test.  For N canonical
/// Kraus operators the N^2 block pairs adjoint(A_k)A_l (+) A_l adjoint(A_k)
/// are vectorized into length 2*dim^2 and ranked; the channel is extremal
/// exactly when all N^2 vectors are linearly independent.
struct ExtremalityReport {
  int kraus_count = 0;       // N after canonicalization
  int test_vector_count = 0; // N^2
  int ambient_dim = 0;       // 2 * dim^2
  int rank = 0;
  bool extremal = false;
};

/// Minimal linearly independent Kraus set via the Choi eigendecomposition;
/// same channel to 1e-9 in Choi max-entry norm.
KrausChannel canonical_kraus(const KrausChannel& k, double tol = kRankTol);

/// Extremality of a unital channel.  tol gates the unitality precondition
/// and canonicalization; the rank itself uses the library default relative
/// tolerance.  Throws NotUnital for non-unital input.
ExtremalityReport landau_streater_extremal(const KrausChannel& k,
                                           double tol = kEqTol);

/// Extremality test for the n-th tensor power, built from the canonicalized
/// factor's n-fold Kraus products.  Agrees with landau_streater_extremal at
/// n = 1 exactly.
ExtremalityReport tensor_power_extremal(const KrausChannel& k, int n,
                                        double tol = kEqTol,
                                        int dim_cap = kDimensionCap);

/// Equality of channels as maps: Choi matrices agree to tol max-entry.
bool kraus_equivalent(const KrausChannel& a, const KrausChannel& b,
                      double tol = kEqTol);

/// True when every canonical Kraus operator equals its transpose to tol
/// (computational basis).
bool is_symmetric_kraus(const KrausChannel& k, double tol = kEqTol);

}  // namespace qchan
