#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchan/extremality.hpp"
#include "test_util.hpp"

using namespace qchan;
using namespace qchan::testutil;

namespace {

// Rank oracle independent of the one-sided Jacobi path: Gaussian elimination
// with partial pivoting over the complex field.  Coarse threshold; the cases
// exercised here have clear-cut ranks.
int elimination_rank(ComplexMatrix m, double rel_tol = 1e-8) {
  const int rows = m.rows(), cols = m.cols();
  double scale = max_abs(m);
  if (scale == 0.0) return 0;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    double best = rel_tol * scale;
    for (int i = row; i < rows; ++i) {
      const double v = std::abs(m(i, col));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m(row, j), m(pivot, j));
    for (int i = row + 1; i < rows; ++i) {
      const cplx f = m(i, col) / m(row, col);
      for (int j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

// Direct construction of the Landau-Streater stack for the oracle.
ComplexMatrix ls_stack(const std::vector<ComplexMatrix>& ops, int dim) {
  const int n = static_cast<int>(ops.size());
  const int d2 = dim * dim;
  ComplexMatrix stack(n * n, 2 * d2);
  int row = 0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l, ++row) {
      const ComplexMatrix left = adjoint(ops[k]) * ops[l];
      const ComplexMatrix right = ops[l] * adjoint(ops[k]);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          stack(row, i * dim + j) = left(i, j);
          stack(row, d2 + i * dim + j) = right(i, j);
        }
      }
    }
  }
  return stack;
}

}  // namespace

TEST_CASE("canonical_kraus") {
  Rng rng(61);
  SUBCASE("zero padding dropped") {
    const KrausChannel k({ComplexMatrix::identity(2), ComplexMatrix(2, 2)});
    const KrausChannel canon = canonical_kraus(k);
    CHECK(canon.kraus.size() == 1);
    CHECK(kraus_equivalent(k, canon));
  }
  SUBCASE("duplicated scaled unitary collapses to one operator") {
    const ComplexMatrix u = haar_unitary(3, rng);
    const cplx r(1.0 / std::sqrt(2.0), 0.0);
    const KrausChannel k({r * u, r * u});
    const KrausChannel canon = canonical_kraus(k);
    CHECK(canon.kraus.size() == 1);
    CHECK(kraus_equivalent(k, canon, 1e-9));
  }
  SUBCASE("random 8-Kraus qubit channel canonicalizes to at most 4") {
    const KrausChannel k = random_unital_channel(2, 8, rng);
    const KrausChannel canon = canonical_kraus(k);
    CHECK(canon.kraus.size() <= 4);
    CHECK(kraus_equivalent(k, canon, 1e-9));
  }
}

TEST_CASE("landau_streater_extremal") {
  Rng rng(67);
  SUBCASE("unitary channels are extremal") {
    const ExtremalityReport r =
        landau_streater_extremal(KrausChannel::unitary(haar_unitary(3, rng)));
    CHECK(r.extremal);
    CHECK(r.kraus_count == 1);
    CHECK(r.test_vector_count == 1);
    CHECK(r.rank == 1);
  }
  SUBCASE("depolarizing qubit is not extremal") {
    const ExtremalityReport r = landau_streater_extremal(depolarizing_qubit());
    CHECK(r.kraus_count == 4);
    CHECK(r.test_vector_count == 16);
    CHECK(r.ambient_dim == 8);
    CHECK(!r.extremal);
    CHECK(r.rank < 16);
    // Oracle: eliminate the stack of Pauli-product blocks directly.
    const KrausChannel canon = canonical_kraus(depolarizing_qubit());
    CHECK(elimination_rank(ls_stack(canon.kraus, 2)) == r.rank);
  }
  SUBCASE("Werner-Holevo-3 is extremal with rank 9") {
    const ExtremalityReport r = landau_streater_extremal(werner_holevo3());
    CHECK(r.kraus_count == 3);
    CHECK(r.test_vector_count == 9);
    CHECK(r.ambient_dim == 18);
    CHECK(r.rank == 9);
    CHECK(r.extremal);
    const KrausChannel canon = canonical_kraus(werner_holevo3());
    CHECK(elimination_rank(ls_stack(canon.kraus, 3)) == 9);
  }
  SUBCASE("mixtures of distinct unitaries are not extremal") {
    for (int trial = 0; trial < 5; ++trial) {
      const int d = 2 + trial % 2;
      const int m = 2 + trial % 3;
      const KrausChannel k = random_unital_channel(d, m, rng);
      CHECK(!landau_streater_extremal(k).extremal);
    }
  }
  SUBCASE("non-unital input throws") {
    CHECK_THROWS_AS(landau_streater_extremal(amplitude_damping(0.5)),
                    NotUnital);
  }
  SUBCASE("invariant under Kraus mixing by a unitary coefficient matrix") {
    const KrausChannel t = random_unital_channel(2, 2, rng);
    const ComplexMatrix u = haar_unitary(2, rng);
    std::vector<ComplexMatrix> mixed;
    for (int i = 0; i < 2; ++i) {
      ComplexMatrix ai(2, 2);
      for (int j = 0; j < 2; ++j) ai += u(i, j) * t.kraus[j];
      mixed.push_back(std::move(ai));
    }
    const ExtremalityReport r1 = landau_streater_extremal(t);
    const ExtremalityReport r2 = landau_streater_extremal(KrausChannel(mixed));
    CHECK(r1.extremal == r2.extremal);
    CHECK(r1.rank == r2.rank);
    CHECK(r1.kraus_count == r2.kraus_count);
  }
  SUBCASE("rank never exceeds min(N^2, ambient)") {
    for (int trial = 0; trial < 4; ++trial) {
      const KrausChannel k = random_unital_channel(2, 3, rng);
      const ExtremalityReport r = landau_streater_extremal(k);
      CHECK(r.rank <= std::min(r.test_vector_count, r.ambient_dim));
    }
  }
}

TEST_CASE("tensor_power_extremal") {
  Rng rng(71);
  SUBCASE("power one agrees with the single-channel test exactly") {
    for (const KrausChannel& k :
         {depolarizing_qubit(), werner_holevo3(),
          KrausChannel::unitary(haar_unitary(2, rng)),
          random_unital_channel(2, 2, rng)}) {
      const ExtremalityReport a = landau_streater_extremal(k);
      const ExtremalityReport b = tensor_power_extremal(k, 1);
      CHECK(a.kraus_count == b.kraus_count);
      CHECK(a.test_vector_count == b.test_vector_count);
      CHECK(a.ambient_dim == b.ambient_dim);
      CHECK(a.rank == b.rank);
      CHECK(a.extremal == b.extremal);
    }
  }
  SUBCASE("unitary channel at power three") {
    const ExtremalityReport r =
        tensor_power_extremal(KrausChannel::unitary(haar_unitary(2, rng)), 3);
    CHECK(r.extremal);
    CHECK(r.kraus_count == 1);
  }
  SUBCASE("depolarizing qubit at power two inherits the rank deficit") {
    const ExtremalityReport r = tensor_power_extremal(depolarizing_qubit(), 2);
    CHECK(r.kraus_count == 16);
    CHECK(r.test_vector_count == 256);
    CHECK(r.ambient_dim == 32);
    CHECK(!r.extremal);
  }
  SUBCASE("dimension cap") {
    CHECK_THROWS_AS(tensor_power_extremal(werner_holevo3(), 5), DimensionCapExceeded);
  }
  SUBCASE("non-unital throws") {
    CHECK_THROWS_AS(tensor_power_extremal(amplitude_damping(0.5), 2), NotUnital);
  }
}

TEST_CASE("kraus_equivalent") {
  Rng rng(73);
  const KrausChannel k = random_unital_channel(2, 3, rng);
  CHECK(kraus_equivalent(k, k));

  const ComplexMatrix u = haar_unitary(3, rng);
  std::vector<ComplexMatrix> mixed;
  for (int i = 0; i < 3; ++i) {
    ComplexMatrix ai(2, 2);
    for (int j = 0; j < 3; ++j) ai += u(i, j) * k.kraus[j];
    mixed.push_back(std::move(ai));
  }
  CHECK(kraus_equivalent(k, KrausChannel(mixed)));

  CHECK(!kraus_equivalent(KrausChannel::identity(2),
                          KrausChannel::unitary(pauli_x())));
  CHECK_THROWS_AS(kraus_equivalent(KrausChannel::identity(2),
                                   KrausChannel::identity(3)),
                  DimensionMismatch);
}

TEST_CASE("is_symmetric_kraus") {
  SUBCASE("diagonal Kraus operators are symmetric") {
    const KrausChannel k(
        {ComplexMatrix::diag({cplx(1 / std::sqrt(2.0), 0), cplx(0.5, 0)}),
         ComplexMatrix::diag({cplx(1 / std::sqrt(2.0), 0), cplx(-0.5, 0)}),
         ComplexMatrix::diag({cplx(0, 0), cplx(1 / std::sqrt(2.0), 0)})});
    CHECK(validate_channel(k).trace_preserving);
    CHECK(is_symmetric_kraus(k));
  }
  SUBCASE("Pauli Y is antisymmetric") {
    const KrausChannel k = KrausChannel::unitary(pauli_y());
    CHECK(!is_symmetric_kraus(k));
  }
  SUBCASE("identity is symmetric") {
    CHECK(is_symmetric_kraus(KrausChannel::identity(3)));
  }
  SUBCASE("Werner-Holevo-3 has antisymmetric canonical operators") {
    CHECK(!is_symmetric_kraus(werner_holevo3()));
  }
}
