#pragma once

#include <cstdint>
#include <vector>

#include "qchan/linalg.hpp"
#include "qchan/matrix.hpp"
#include "qchan/rng.hpp"

namespace qchan {

/// Unit-trace positive semidefinite state.  Construction validates
/// hermiticity (1e-10), trace (1e-10) and the smallest eigenvalue (>= -1e-10).
struct DensityMatrix {
  int dim = 0;
  ComplexMatrix mat;

  DensityMatrix(ComplexMatrix m, double tol = kEqTol);
};

/// A channel as a set of Kraus operators.  Construction checks shape only
/// (square, equal dims, nonempty, finite); trace preservation and unitality
/// are queries so that defective sets remain representable for negative
/// tests.  All channel constructors in this library produce trace-preserving
/// sets when fed valid inputs.
struct KrausChannel {
  int dim = 0;
  std::vector<ComplexMatrix> kraus;

  KrausChannel(std::vector<ComplexMatrix> ops);
  static KrausChannel unitary(ComplexMatrix u) {
    return KrausChannel({std::move(u)});
  }
  static KrausChannel identity(int dim) {
    return KrausChannel({ComplexMatrix::identity(dim)});
  }
};

/// d^2 x d^2 Choi representation; the canonical witness for channel
/// equality, rank and distance.
struct ChoiMatrix {
  int dim = 0;
  ComplexMatrix mat;

  ChoiMatrix(int d, ComplexMatrix m);

  /// Checks hermiticity, positivity (>= -tol) and the partial-trace
  /// condition tr_out(J) = I.  Throws on violation.
  void validate(double tol = kEqTol) const;
};

struct ValidationReport {
  int dim = 0;
  int kraus_count = 0;
  double max_trace_preserving_deviation = 0.0;  // |sum adj(A)A - I|
  double max_unital_deviation = 0.0;            // |sum A adj(A) - I|
  bool trace_preserving = false;
  bool unital = false;
  double tolerance = kEqTol;
};

ValidationReport validate_channel(const KrausChannel& k, double tol = kEqTol);

DensityMatrix apply(const KrausChannel& k, const DensityMatrix& rho);

/// Raw action sum_i A_i m adjoint(A_i) without state validation.
ComplexMatrix apply_raw(const KrausChannel& k, const ComplexMatrix& m);

bool is_unital(const KrausChannel& k, double tol = kEqTol);

/// t after r: Kraus set {B_j * A_i}; counts multiply.
KrausChannel compose(const KrausChannel& t, const KrausChannel& r);

/// Convex mixture sum_i w_i T_i via scaled Kraus union.
KrausChannel mix_channels(
    const std::vector<std::pair<double, KrausChannel>>& parts,
    double tol = 1e-12);

KrausChannel tensor(const KrausChannel& t, const KrausChannel& s);

KrausChannel tensor_power(const KrausChannel& t, int n,
                          int dim_cap = kDimensionCap);

ChoiMatrix to_choi(const KrausChannel& k);

/// Kraus operators from the Choi eigendecomposition; eigenvalues above
/// tol * lambda_max * dim(J) are kept, so the operator count matches
/// numeric_rank(J, tol).  Throws NotPSD when an eigenvalue < -tol.
KrausChannel kraus_from_choi(const ChoiMatrix& j, double tol = kRankTol);

/// Random mixture of `num_unitaries` Haar unitaries with Dirichlet weights:
/// a seeded generator of unital channels for tests and experiments.
KrausChannel random_unital_channel(int dim, int num_unitaries,
                                   std::uint64_t seed);
KrausChannel random_unital_channel(int dim, int num_unitaries, Rng& rng);

/// rho = G adjoint(G) / tr, G complex Gaussian.
DensityMatrix random_density(int dim, Rng& rng);

}  // namespace qchan
