#include "qchan/mixapprox.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qchan/catlaws.hpp"
#include "qchan/kernels.hpp"
#include "qchan/linalg.hpp"

namespace qchan {

UnitaryMixture::UnitaryMixture(
    std::vector<std::pair<double, ComplexMatrix>> t, double tol)
    : terms(std::move(t)) {
  if (terms.empty()) throw BadWeights("mixture needs at least one term");
  dim = terms.front().second.rows();
  double total = 0.0;
  const ComplexMatrix eye = ComplexMatrix::identity(dim);
  for (const auto& [w, u] : terms) {
    if (w < 0.0) throw BadWeights("negative mixture weight");
    if (!u.square() || u.rows() != dim) {
      throw DimensionMismatch("mixture unitaries must share one dimension");
    }
    if (max_abs_diff(adjoint(u) * u, eye) > tol) {
      throw Error("mixture term is not unitary at tolerance");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > tol) {
    throw BadWeights("mixture weights do not sum to one");
  }
}

KrausChannel mixture_to_channel(const UnitaryMixture& m) {
  std::vector<ComplexMatrix> ops;
  for (const auto& [w, u] : m.terms) {
    if (w > 0.0) ops.push_back(std::sqrt(w) * u);
  }
  if (ops.empty()) throw BadWeights("mixture has no positive weight");
  return KrausChannel(std::move(ops));
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim != b.dim) {
    throw DimensionMismatch("channels of different dimension");
  }
  const ComplexMatrix ja = to_choi(a).mat;
  const ComplexMatrix jb = to_choi(b).mat;
  return frobenius_norm(ja - jb) / a.dim;
}

double fit_objective(
    const ComplexMatrix& target_choi,
    const std::vector<std::pair<double, ComplexMatrix>>& terms) {
  const int d = terms.front().second.rows();
  const int d2 = d * d;
  ComplexMatrix r = target_choi * cplx(-1.0, 0.0);
  for (const auto& [w, u] : terms) {
    const std::vector<cplx> v = vec(u);
    kernels::active().rank1_update(cplx(w, 0.0), v.data(), v.data(), r.data(),
                                   d2, d2);
  }
  const double fro = frobenius_norm(r);
  return fro * fro / (static_cast<double>(d) * d);
}

ComplexMatrix fit_unitary_gradient(
    const ComplexMatrix& target_choi,
    const std::vector<std::pair<double, ComplexMatrix>>& terms, int i) {
  const int d = terms.front().second.rows();
  const int d2 = d * d;
  ComplexMatrix r = target_choi * cplx(-1.0, 0.0);
  for (const auto& [w, u] : terms) {
    const std::vector<cplx> v = vec(u);
    kernels::active().rank1_update(cplx(w, 0.0), v.data(), v.data(), r.data(),
                                   d2, d2);
  }
  const std::vector<cplx> vi = vec(terms[i].second);
  std::vector<cplx> rv(d2, cplx(0.0, 0.0));
  kernels::active().matmul(r.data(), vi.data(), rv.data(), d2, d2, 1);
  const double scale = 4.0 * terms[i].first / (static_cast<double>(d) * d);
  for (auto& x : rv) x *= scale;
  return unvec(rv, d, d);
}

namespace {

// Euclidean projection onto the probability simplex (sort-based).
std::vector<double> project_simplex(std::vector<double> u) {
  const int n = static_cast<int>(u.size());
  std::vector<double> s = u;
  std::sort(s.begin(), s.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  int rho = -1;
  for (int j = 0; j < n; ++j) {
    cum += s[j];
    const double cand = (cum - 1.0) / (j + 1);
    if (s[j] - cand > 0.0) {
      rho = j;
      theta = cand;
    }
  }
  (void)rho;
  for (auto& x : u) x = std::max(x - theta, 0.0);
  return u;
}

struct FitState {
  int d = 0;
  int d2 = 0;
  std::vector<double> w;
  std::vector<ComplexMatrix> u;
  std::vector<std::vector<cplx>> v;  // vec(u) cache

  void refresh_vec(int i) { v[i] = vec(u[i]); }

  std::vector<std::pair<double, ComplexMatrix>> terms() const {
    std::vector<std::pair<double, ComplexMatrix>> t;
    const int m = static_cast<int>(w.size());
    t.reserve(m);
    for (int i = 0; i < m; ++i) t.emplace_back(w[i], u[i]);
    return t;
  }

  UnitaryMixture mixture() const { return UnitaryMixture(terms()); }
};

struct RunResult {
  FitState state;
  double distance = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> history;
};

class Fitter {
 public:
  Fitter(const KrausChannel& t, const FitOptions& opt)
      : target_(to_choi(t).mat), t_(t), opt_(opt) {}

  // Bit-reproducible distance along the exact path choi_distance would take,
  // so the report honesty invariant holds without slack.
  double fresh_distance(const FitState& st) const {
    return choi_distance(t_, mixture_to_channel(st.mixture()));
  }

  RunResult run(FitState st) const {
    RunResult res;
    double dist = fresh_distance(st);
    res.history.push_back(dist);
    int iter = 0;
    for (; iter < opt_.max_iter; ++iter) {
      FitState snapshot = st;
      weight_step(&st);
      unitary_step(&st);
      const double next = fresh_distance(st);
      if (!(next < dist)) {
        st = std::move(snapshot);
        res.converged = true;
        break;
      }
      const double drop = dist - next;
      dist = next;
      res.history.push_back(dist);
      if (drop <= opt_.conv_tol * std::max(dist, 1e-300)) {
        ++iter;
        res.converged = true;
        break;
      }
    }
    if (iter >= opt_.max_iter) res.converged = false;
    res.iterations = iter;
    res.state = std::move(st);
    res.distance = dist;
    return res;
  }

 private:
  // Quadratic form of the weight subproblem: F(w) = (w'Qw - 2c'w + k)/d^2.
  void weight_step(FitState* st) const {
    const int m = static_cast<int>(st->w.size());
    const auto& ker = kernels::active();
    const std::size_t n2 = static_cast<std::size_t>(st->d2);
    std::vector<double> q(static_cast<std::size_t>(m) * m);
    std::vector<double> c(m);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        const double val = std::norm(ker.dotc(st->v[i].data(), st->v[j].data(), n2));
        q[i * m + j] = val;
        q[j * m + i] = val;
      }
      std::vector<cplx> jv(n2, cplx(0.0, 0.0));
      ker.matmul(target_.data(), st->v[i].data(), jv.data(), st->d2, st->d2, 1);
      c[i] = ker.dotc(st->v[i].data(), jv.data(), n2).real();
    }
    auto quad = [&](const std::vector<double>& w) {
      double f = 0.0;
      for (int i = 0; i < m; ++i) {
        double qi = 0.0;
        for (int j = 0; j < m; ++j) qi += q[i * m + j] * w[j];
        f += w[i] * (qi - 2.0 * c[i]);
      }
      return f;
    };
    double fw = quad(st->w);
    for (int inner = 0; inner < 200; ++inner) {
      std::vector<double> grad(m);
      for (int i = 0; i < m; ++i) {
        double g = -2.0 * c[i];
        for (int j = 0; j < m; ++j) g += 2.0 * q[i * m + j] * st->w[j];
        grad[i] = g;
      }
      double step = 1.0;
      bool accepted = false;
      for (int halt = 0; halt < 60; ++halt) {
        std::vector<double> cand(m);
        for (int i = 0; i < m; ++i) cand[i] = st->w[i] - step * grad[i];
        cand = project_simplex(std::move(cand));
        const double fc = quad(cand);
        if (fc < fw) {
          double delta = 0.0;
          for (int i = 0; i < m; ++i) {
            delta = std::max(delta, std::abs(cand[i] - st->w[i]));
          }
          st->w = std::move(cand);
          const double drop = fw - fc;
          fw = fc;
          accepted = true;
          if (delta <= 1e-15 ||
              drop <= opt_.conv_tol * std::max(std::abs(fw), 1e-300)) {
            return;
          }
          break;
        }
        step *= 0.5;
      }
      if (!accepted) return;
    }
  }

  void unitary_step(FitState* st) const {
    const int m = static_cast<int>(st->w.size());
    const auto& ker = kernels::active();
    const int d2 = st->d2;
    const std::size_t n2 = static_cast<std::size_t>(d2);
    // Residual R = sum_i w_i v_i v_i^dag - J_t, kept current per accepted move.
    ComplexMatrix r = target_ * cplx(-1.0, 0.0);
    for (int i = 0; i < m; ++i) {
      ker.rank1_update(cplx(st->w[i], 0.0), st->v[i].data(), st->v[i].data(),
                       r.data(), d2, d2);
    }
    auto sq_norm = [&](const ComplexMatrix& x) {
      const double f = frobenius_norm(x);
      return f * f;
    };
    double fcur = sq_norm(r);
    for (int i = 0; i < m; ++i) {
      const double wi = st->w[i];
      if (wi <= 0.0) continue;
      std::vector<cplx> rv(n2, cplx(0.0, 0.0));
      ker.matmul(r.data(), st->v[i].data(), rv.data(), d2, d2, 1);
      ComplexMatrix grad = unvec(rv, st->d, st->d);
      grad *= cplx(4.0 * wi / (static_cast<double>(st->d) * st->d), 0.0);
      double step = 1.0;
      for (int halt = 0; halt < 40; ++halt, step *= 0.5) {
        ComplexMatrix cand_u = st->u[i] - step * grad;
        ComplexMatrix cand;
        try {
          cand = polar_unitary(cand_u);
        } catch (const SingularInput&) {
          continue;
        }
        const std::vector<cplx> cand_v = vec(cand);
        ComplexMatrix r_cand = r;
        kernels::active().rank1_update(cplx(-wi, 0.0), st->v[i].data(),
                                       st->v[i].data(), r_cand.data(), d2, d2);
        kernels::active().rank1_update(cplx(wi, 0.0), cand_v.data(),
                                       cand_v.data(), r_cand.data(), d2, d2);
        const double fc = sq_norm(r_cand);
        if (fc < fcur) {
          st->u[i] = std::move(cand);
          st->v[i] = cand_v;
          r = std::move(r_cand);
          fcur = fc;
          break;
        }
      }
    }
  }

  ComplexMatrix target_;
  KrausChannel t_;
  FitOptions opt_;
};

FitState initial_state(int d, int m, Rng& rng) {
  FitState st;
  st.d = d;
  st.d2 = d * d;
  st.w.assign(m, 1.0 / m);
  st.u.reserve(m);
  st.v.resize(m);
  for (int i = 0; i < m; ++i) {
    st.u.push_back(haar_unitary(d, rng));
    st.refresh_vec(i);
  }
  return st;
}

FitState state_from_mixture(const UnitaryMixture& mix, int m, Rng& rng) {
  FitState st;
  st.d = mix.dim;
  st.d2 = mix.dim * mix.dim;
  const int have = static_cast<int>(mix.terms.size());
  for (int i = 0; i < std::min(have, m); ++i) {
    st.w.push_back(mix.terms[i].first);
    st.u.push_back(mix.terms[i].second);
  }
  while (static_cast<int>(st.w.size()) < m) {
    st.w.push_back(0.0);
    st.u.push_back(haar_unitary(mix.dim, rng));
  }
  // Renormalize in case the warm mixture was truncated.
  const double total = std::accumulate(st.w.begin(), st.w.end(), 0.0);
  if (total <= 0.0) throw BadWeights("warm-start mixture has no weight");
  if (total != 1.0) {
    for (auto& x : st.w) x /= total;
  }
  st.v.resize(m);
  for (int i = 0; i < m; ++i) st.refresh_vec(i);
  return st;
}

}  // namespace

FitReport fit_unitary_mixture(const KrausChannel& t, int m, int restarts,
                              std::uint64_t seed, const FitOptions& opt,
                              const std::optional<UnitaryMixture>& warm) {
  if (m < 1) throw Error("fit_unitary_mixture: m must be >= 1");
  if (restarts < 1) throw Error("fit_unitary_mixture: restarts must be >= 1");
  if (!is_unital(t)) {
    throw NotUnital("fit target must be a unital channel");
  }
  const Fitter fitter(t, opt);
  std::optional<RunResult> best;
  int used = 0;
  if (warm) {
    if (warm->dim != t.dim) {
      throw DimensionMismatch("warm-start mixture dimension mismatch");
    }
    Rng rng(seed);
    best = fitter.run(state_from_mixture(*warm, m, rng));
    ++used;
  }
  for (int r = 0; r < restarts; ++r) {
    Rng rng(seed + static_cast<std::uint64_t>(r));
    RunResult cand = fitter.run(initial_state(t.dim, m, rng));
    ++used;
    if (!best || cand.distance < best->distance) best = std::move(cand);
  }
  FitReport rep{best->distance, best->state.mixture(), best->iterations,
                used,           best->converged,       best->history};
  return rep;
}

std::vector<FitReport> fit_mixture_sweep(const KrausChannel& t, int m_max,
                                         int restarts, std::uint64_t seed,
                                         const FitOptions& opt) {
  std::vector<FitReport> out;
  std::optional<UnitaryMixture> warm;
  for (int m = 1; m <= m_max; ++m) {
    out.push_back(fit_unitary_mixture(t, m, restarts, seed, opt, warm));
    warm = out.back().mixture;
  }
  return out;
}

ExperimentTable tensor_power_experiment(const KrausChannel& t, int n_max,
                                        const std::vector<int>& m_schedule,
                                        int restarts, std::uint64_t seed,
                                        const FitOptions& opt, int dim_cap) {
  if (n_max < 1) throw Error("tensor_power_experiment: n_max must be >= 1");
  if (static_cast<int>(m_schedule.size()) < n_max) {
    throw Error("tensor_power_experiment: schedule shorter than n_max");
  }
  if (!is_unital(t)) {
    throw NotUnital("experiment target must be a unital channel");
  }
  ExperimentTable table;
  for (int k = 1; k <= n_max; ++k) {
    const KrausChannel tk = tensor_power(t, k, dim_cap);
    const FitReport fit =
        fit_unitary_mixture(tk, m_schedule[k - 1], restarts, seed, opt);
    ExperimentRow row;
    row.k = k;
    row.m = m_schedule[k - 1];
    row.best_distance = fit.best_distance;
    row.chain_copies = chain_copy_count(k);
    row.iterations = fit.iterations;
    row.converged = fit.converged;
    table.rows.push_back(row);
    table.histories.push_back(fit.history);
  }
  return table;
}

}  // namespace qchan
