#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchan/mixapprox.hpp"
#include "test_util.hpp"

using namespace qchan;
using namespace qchan::testutil;

TEST_CASE("UnitaryMixture validation") {
  Rng rng(201);
  const ComplexMatrix u = haar_unitary(2, rng);
  CHECK_NOTHROW(UnitaryMixture({{0.5, u}, {0.5, pauli_x()}}));
  CHECK_THROWS_AS(UnitaryMixture({{0.5, u}, {0.6, pauli_x()}}), BadWeights);
  CHECK_THROWS_AS(UnitaryMixture({{-0.1, u}, {1.1, pauli_x()}}), BadWeights);
  ComplexMatrix notu = ComplexMatrix::identity(2);
  notu(0, 0) = cplx(2.0, 0.0);
  CHECK_THROWS_AS(UnitaryMixture({{1.0, notu}}), Error);
}

TEST_CASE("mixture_to_channel") {
  Rng rng(203);
  SUBCASE("single term is the unitary channel") {
    const ComplexMatrix u = haar_unitary(3, rng);
    const KrausChannel k = mixture_to_channel(UnitaryMixture({{1.0, u}}));
    REQUIRE(k.kraus.size() == 1);
    CHECK(max_abs_diff(k.kraus[0], u) < 1e-15);
  }
  SUBCASE("uniform Pauli mixture is the depolarizing channel") {
    const UnitaryMixture mix({{0.25, ComplexMatrix::identity(2)},
                              {0.25, pauli_x()},
                              {0.25, pauli_y()},
                              {0.25, pauli_z()}});
    const KrausChannel k = mixture_to_channel(mix);
    ComplexMatrix expect = ComplexMatrix::identity(4);
    expect *= cplx(0.5, 0.0);
    CHECK(max_abs_diff(to_choi(k).mat, expect) < 1e-15);
    CHECK(choi_distance(k, depolarizing_qubit()) < 1e-14);
  }
  SUBCASE("zero-weight terms dropped; output unital") {
    const UnitaryMixture mix({{0.0, haar_unitary(2, rng)},
                              {1.0, haar_unitary(2, rng)}});
    const KrausChannel k = mixture_to_channel(mix);
    CHECK(k.kraus.size() == 1);
    CHECK(is_unital(k));
    CHECK(validate_channel(k).trace_preserving);
  }
}

TEST_CASE("choi_distance") {
  Rng rng(207);
  const KrausChannel t = random_unital_channel(2, 3, rng);
  SUBCASE("identity of indiscernibles and symmetry") {
    CHECK(choi_distance(t, t) == 0.0);
    const KrausChannel s = random_unital_channel(2, 2, rng);
    CHECK(choi_distance(t, s) == choi_distance(s, t));
    CHECK(choi_distance(t, s) > 0.0);
  }
  SUBCASE("closed form for identity vs depolarizing qubit") {
    // J_id = 2|Omega><Omega|, J_dep = I4/2; the difference has eigenvalues
    // 3/2 (once, on |Omega>) and -1/2 (three times), so the Frobenius norm
    // is sqrt(9/4 + 3/4) = sqrt(3) and the normalized distance sqrt(3)/2.
    const double d =
        choi_distance(KrausChannel::identity(2), depolarizing_qubit());
    CHECK(d == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(
        choi_distance(KrausChannel::identity(2), KrausChannel::identity(3)),
        DimensionMismatch);
  }
}

TEST_CASE("fit objective gradient matches finite differences") {
  Rng rng(211);
  for (int trial = 0; trial < 4; ++trial) {
    const int d = 2 + trial % 2;
    const int m = 1 + trial % 3;
    const KrausChannel t = random_unital_channel(d, 2, rng);
    const ComplexMatrix jt = to_choi(t).mat;
    std::vector<std::pair<double, ComplexMatrix>> terms;
    std::vector<double> w = rng.dirichlet(m);
    for (int i = 0; i < m; ++i) terms.emplace_back(w[i], haar_unitary(d, rng));
    const int idx = trial % m;
    const ComplexMatrix grad = fit_unitary_gradient(jt, terms, idx);
    const double h = 1e-6;
    double worst = 0.0;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        for (int part = 0; part < 2; ++part) {
          auto up = terms, dn = terms;
          const cplx delta = part == 0 ? cplx(h, 0) : cplx(0, h);
          up[idx].second(a, b) += delta;
          dn[idx].second(a, b) -= delta;
          const double fd =
              (fit_objective(jt, up) - fit_objective(jt, dn)) / (2 * h);
          const double an =
              part == 0 ? grad(a, b).real() : grad(a, b).imag();
          worst = std::max(worst, std::abs(fd - an));
        }
      }
    }
    const double scale = std::max(max_abs(grad), 1e-12);
    CHECK(worst / scale < 1e-5);
  }
}

TEST_CASE("fit recovers a unitary channel") {
  const ComplexMatrix v = haar_unitary(2, 5150);
  const KrausChannel t = KrausChannel::unitary(v);
  const FitReport rep = fit_unitary_mixture(t, 1, 2, 1);
  CHECK(rep.best_distance <= 1e-6);
  // Recovered unitary matches up to global phase.
  const ComplexMatrix& u = rep.mixture.terms[0].second;
  const double overlap = std::abs(trace(adjoint(u) * v)) / 2.0;
  CHECK(overlap >= 1.0 - 1e-6);
  CHECK(rep.restarts_used == 2);
}

TEST_CASE("fit report invariants") {
  Rng rng(213);
  const KrausChannel t = random_unital_channel(2, 2, rng);
  const FitReport rep = fit_unitary_mixture(t, 2, 2, 7);
  SUBCASE("history non-increasing, final entry is best_distance") {
    REQUIRE(!rep.history.empty());
    for (std::size_t i = 1; i < rep.history.size(); ++i) {
      CHECK(rep.history[i] <= rep.history[i - 1]);
    }
    CHECK(rep.best_distance == rep.history.back());
  }
  SUBCASE("mixture invariants hold") {
    double total = 0.0;
    for (const auto& [w, u] : rep.mixture.terms) {
      total += w;
      CHECK(w >= 0.0);
      CHECK(max_abs_diff(adjoint(u) * u, ComplexMatrix::identity(2)) <= 1e-10);
    }
    CHECK(std::abs(total - 1.0) <= 1e-10);
  }
  SUBCASE("report honesty: recomputed distance matches") {
    const double recomputed =
        choi_distance(t, mixture_to_channel(rep.mixture));
    CHECK(std::abs(recomputed - rep.best_distance) <= 1e-12);
  }
  SUBCASE("non-unital target rejected") {
    CHECK_THROWS_AS(fit_unitary_mixture(amplitude_damping(0.5), 1, 1, 0),
                    NotUnital);
  }
}

TEST_CASE("warm-start sweep is monotone in m") {
  Rng rng(217);
  const KrausChannel t = random_unital_channel(2, 3, rng);
  FitOptions opt;
  opt.max_iter = 60;
  const std::vector<FitReport> sweep = fit_mixture_sweep(t, 4, 2, 3, opt);
  REQUIRE(sweep.size() == 4);
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    CHECK(sweep[i].best_distance <= sweep[i - 1].best_distance + 1e-12);
  }
}

TEST_CASE("tensor_power_experiment") {
  SUBCASE("unitary target stays near zero at both powers") {
    const KrausChannel t = KrausChannel::unitary(haar_unitary(2, 31337));
    FitOptions opt;
    opt.max_iter = 150;
    const ExperimentTable table =
        tensor_power_experiment(t, 2, {1, 1}, 2, 5, opt);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].k == 1);
    CHECK(table.rows[1].k == 2);
    CHECK(table.rows[0].chain_copies == 1);
    CHECK(table.rows[1].chain_copies == 3);
    CHECK(table.rows[0].best_distance <= 1e-6);
    CHECK(table.rows[1].best_distance <= 1e-6);
  }
  SUBCASE("schedule validation") {
    const KrausChannel t = KrausChannel::identity(2);
    CHECK_THROWS_AS(tensor_power_experiment(t, 3, {1, 1}, 1, 0), Error);
  }
  SUBCASE("deterministic across identical runs") {
    const KrausChannel t = depolarizing_qubit();
    FitOptions opt;
    opt.max_iter = 40;
    const ExperimentTable a = tensor_power_experiment(t, 1, {2}, 2, 9, opt);
    const ExperimentTable b = tensor_power_experiment(t, 1, {2}, 2, 9, opt);
    CHECK(a.rows[0].best_distance == b.rows[0].best_distance);
    CHECK(a.histories == b.histories);
  }
}
