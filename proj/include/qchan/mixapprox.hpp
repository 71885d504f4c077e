#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qchan/channel.hpp"

namespace qchan {

/// Convex combination of unitarily implemented channels: weights summing to
/// one (1e-10) and unitaries satisfying adjoint(u)u = I to 1e-10.
struct UnitaryMixture {
  int dim = 0;
  std::vector<std::pair<double, ComplexMatrix>> terms;

  UnitaryMixture(std::vector<std::pair<double, ComplexMatrix>> t,
                 double tol = kEqTol);
};

/// Kraus set {sqrt(p_i) U_i}; zero-weight terms are dropped.
KrausChannel mixture_to_channel(const UnitaryMixture& m);

/// Frobenius norm of the Choi difference divided by dim.  The division makes
/// per-copy distances comparable across tensor powers.
double choi_distance(const KrausChannel& a, const KrausChannel& b);

struct FitReport {
  double best_distance = 0.0;
  UnitaryMixture mixture;
  int iterations = 0;
  int restarts_used = 0;
  bool converged = false;
  std::vector<double> history;  // accepted per-iteration distances
};

struct FitOptions {
  int max_iter = 500;
  double conv_tol = 1e-12;  // relative objective decrease
};

/// Best m-term unitary-mixture approximation of a unital channel under the
/// normalized Choi-Frobenius distance.
///
/// Alternating minimization: (a) weights by projected gradient over the
/// probability simplex, run to stationarity; (b) one backtracking descent
/// step per unitary, retracting the Euclidean-gradient update onto the
/// unitary manifold through polar_unitary.  The best result over `restarts`
/// Haar initializations (seeds seed+r) wins, ties resolved toward the lower
/// restart index, so parallel and serial evaluation would pick the same
/// winner.  When `warm` is given it is padded/truncated to m terms and run
/// before the Haar restarts, which makes best_distance non-increasing in m
/// for sweeps that feed each winner forward.
FitReport fit_unitary_mixture(const KrausChannel& t, int m, int restarts,
                              std::uint64_t seed,
                              const FitOptions& opt = {},
                              const std::optional<UnitaryMixture>& warm = {});

/// fit_unitary_mixture for m = 1..m_max with warm starts chained from each
/// previous winner (padded by one Haar unitary at weight zero).
std::vector<FitReport> fit_mixture_sweep(const KrausChannel& t, int m_max,
                                         int restarts, std::uint64_t seed,
                                         const FitOptions& opt = {});

struct ExperimentRow {
  int k = 0;                    // tensor power
  int m = 0;                    // mixture size fitted
  double best_distance = 0.0;   // per-copy normalized distance
  long long chain_copies = 0;   // k(k+1)/2
  int iterations = 0;
  bool converged = false;
};

struct ExperimentTable {
  std::vector<ExperimentRow> rows;
  std::vector<std::vector<double>> histories;  // per row
};

/// Fits m_schedule[k-1] unitaries to tensor_power(t, k) for k = 1..n_max and
/// tabulates the per-copy distances next to the chain copy count.
ExperimentTable tensor_power_experiment(const KrausChannel& t, int n_max,
                                        const std::vector<int>& m_schedule,
                                        int restarts, std::uint64_t seed,
                                        const FitOptions& opt = {},
                                        int dim_cap = kDimensionCap);

// Objective/gradient pair used by the unitary step, exposed for
// finite-difference verification.  `terms` may hold arbitrary (not
// necessarily unitary) matrices.

/// ||sum_i w_i vec(U_i)vec(U_i)^dag - target_choi||_F^2 / dim^2.
double fit_objective(const ComplexMatrix& target_choi,
                     const std::vector<std::pair<double, ComplexMatrix>>& terms);

/// Euclidean gradient of fit_objective with respect to term i:
/// G_ab = dF/dRe(U_ab) + i dF/dIm(U_ab).
ComplexMatrix fit_unitary_gradient(
    const ComplexMatrix& target_choi,
    const std::vector<std::pair<double, ComplexMatrix>>& terms, int i);

}  // namespace qchan
