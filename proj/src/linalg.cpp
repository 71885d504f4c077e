#include "qchan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qchan/kernels.hpp"

namespace qchan {
namespace {

// Jacobi angle (c, s, t) diagonalizing the Hermitian 2x2 [[a, g],[conj(g), b]]
// after the phase of g has been factored out; |t| <= 1 for convergence.
struct JacobiAngle {
  double c, s, t;
};

JacobiAngle jacobi_angle(double a, double b, double absg) {
  const double zeta = (a - b) / (2.0 * absg);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, c * t, t};
}

constexpr int kMaxSweeps = 64;
constexpr double kOrthEps = 1e-14;

struct OneSidedJacobi {
  int m = 0, n = 0;
  std::vector<cplx> cols;  // column-major m x n working copy
  std::vector<cplx> v;     // column-major n x n accumulated rotations
  bool want_v = false;

  cplx* col(int j) { return cols.data() + static_cast<std::size_t>(j) * m; }
  cplx* vcol(int j) { return v.data() + static_cast<std::size_t>(j) * n; }

  void load(const ComplexMatrix& a, bool with_v) {
    m = a.rows();
    n = a.cols();
    want_v = with_v;
    cols.assign(static_cast<std::size_t>(m) * n, cplx(0.0, 0.0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) col(j)[i] = a(i, j);
    }
    if (want_v) {
      v.assign(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
      for (int j = 0; j < n; ++j) vcol(j)[j] = cplx(1.0, 0.0);
    }
  }

  void run() {
    const auto& k = kernels::active();
    double fro2 = 0.0;
    for (const cplx& x : cols) fro2 += std::norm(x);
    // Columns this small are roundoff residue of exact dependencies; their
    // angles are noise, so rotating against them never settles.
    const double tiny2 = 1e-30 * fro2;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      bool rotated = false;
      for (int i = 0; i + 1 < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const double a = k.dotc(col(i), col(i), m).real();
          const double b = k.dotc(col(j), col(j), m).real();
          if (a <= tiny2 || b <= tiny2) continue;
          const cplx g = k.dotc(col(i), col(j), m);
          const double absg = std::abs(g);
          if (absg <= kOrthEps * std::sqrt(a * b) || absg == 0.0) continue;
          rotated = true;
          const cplx phase = g / absg;
          const JacobiAngle r = jacobi_angle(a, b, absg);
          const cplx s = r.s * std::conj(phase);
          k.rot(col(i), col(j), static_cast<std::size_t>(m), r.c, s);
          if (want_v) {
            k.rot(vcol(i), vcol(j), static_cast<std::size_t>(n), r.c, s);
          }
        }
      }
      if (!rotated) return;
    }
    throw Error("one-sided Jacobi SVD did not converge");
  }

  // Column norms after run(), descending, together with the ordering.
  std::vector<double> norms(std::vector<int>* order) const {
    std::vector<double> s(n);
    const auto& k = kernels::active();
    for (int j = 0; j < n; ++j) {
      s[j] = std::sqrt(
          k.dotc(cols.data() + static_cast<std::size_t>(j) * m,
                 cols.data() + static_cast<std::size_t>(j) * m,
                 static_cast<std::size_t>(m))
              .real());
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&s](int x, int y) { return s[x] > s[y]; });
    std::vector<double> sorted(n);
    for (int j = 0; j < n; ++j) sorted[j] = s[idx[j]];
    if (order) *order = std::move(idx);
    return sorted;
  }
};

}  // namespace

std::vector<double> singular_values(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  OneSidedJacobi work;
  // Fewer columns means fewer rotation pairs; transposition keeps sigma.
  if (a.cols() > a.rows()) {
    work.load(adjoint(a), false);
  } else {
    work.load(a, false);
  }
  work.run();
  return work.norms(nullptr);
}

Svd svd(const ComplexMatrix& a) {
  OneSidedJacobi work;
  work.load(a, true);
  work.run();
  std::vector<int> order;
  std::vector<double> sigma = work.norms(&order);
  const int r = std::min(a.rows(), a.cols());
  Svd out;
  out.sigma.assign(sigma.begin(), sigma.begin() + r);
  out.u = ComplexMatrix(a.rows(), r);
  out.v = ComplexMatrix(a.cols(), r);
  for (int j = 0; j < r; ++j) {
    const int src = order[j];
    const double s = sigma[j];
    if (s > 0.0) {
      const cplx* bcol = work.cols.data() + static_cast<std::size_t>(src) * a.rows();
      for (int i = 0; i < a.rows(); ++i) out.u(i, j) = bcol[i] / s;
    }
    const cplx* vc = work.v.data() + static_cast<std::size_t>(src) * a.cols();
    for (int i = 0; i < a.cols(); ++i) out.v(i, j) = vc[i];
  }
  return out;
}

int numeric_rank(const ComplexMatrix& a, double rel_tol) {
  if (rel_tol < 0.0) throw Error("numeric_rank: negative tolerance");
  const std::vector<double> s = singular_values(a);
  if (s.empty()) return 0;
  const double cutoff = rel_tol * s[0] * std::max(a.rows(), a.cols());
  int rank = 0;
  for (double x : s) {
    if (x > cutoff) ++rank;
  }
  return rank;
}

Eigh hermitian_eig(const ComplexMatrix& a) {
  if (!a.square()) throw NotSquare("hermitian_eig needs a square matrix");
  const int n = a.rows();
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    }
  }
  // W holds adjoint(V); V <- V*J becomes a row rotation W <- adjoint(J)*W,
  // so both the matrix and the eigenvector accumulator update by row pairs.
  ComplexMatrix w = ComplexMatrix::identity(n);
  const double stop = 1e-15 * std::max(frobenius_norm(h), 1e-300);
  const auto& k = kernels::active();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p + 1 < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = h(p, q);
        const double absg = std::abs(apq);
        off = std::max(off, absg);
        if (absg <= stop) continue;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const cplx phase = apq / absg;
        const JacobiAngle r = jacobi_angle(app, aqq, absg);
        const cplx s_rows = r.s * phase;
        k.rot(&h(p, 0), &h(q, 0), static_cast<std::size_t>(n), r.c, s_rows);
        k.rot(&w(p, 0), &w(q, 0), static_cast<std::size_t>(n), r.c, s_rows);
        // Closed-form 2x2 block, then restore Hermitian symmetry in the
        // two touched columns.
        h(p, p) = cplx(app + r.t * absg, 0.0);
        h(q, q) = cplx(aqq - r.t * absg, 0.0);
        h(p, q) = cplx(0.0, 0.0);
        h(q, p) = cplx(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          h(i, p) = std::conj(h(p, i));
          h(i, q) = std::conj(h(q, i));
        }
      }
    }
    if (off <= stop) break;
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = h(i, i).real();
  std::stable_sort(idx.begin(), idx.end(),
                   [&vals](int x, int y) { return vals[x] > vals[y]; });
  Eigh out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = vals[idx[j]];
    for (int i = 0; i < n; ++i) out.vectors(i, j) = std::conj(w(idx[j], i));
  }
  return out;
}

ComplexMatrix cholesky_factor(const ComplexMatrix& a, double tol) {
  if (!a.square()) throw NotSquare("cholesky_factor needs a square matrix");
  if (tol < 0.0) throw Error("cholesky_factor: negative tolerance");
  const int n = a.rows();
  double asym = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      asym = std::max(asym, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  if (asym > tol) throw NotHermitian("cholesky_factor: asymmetry above tol");
  ComplexMatrix l(n, n);
  for (int j = 0; j < n; ++j) {
    double diag = a(j, j).real();
    for (int p = 0; p < j; ++p) {
      diag -= std::norm(l(j, p));
    }
    if (diag <= tol) {
      throw NotPositiveDefinite("cholesky_factor: pivot below tol");
    }
    const double ljj = std::sqrt(diag);
    l(j, j) = cplx(ljj, 0.0);
    for (int i = j + 1; i < n; ++i) {
      cplx sum = 0.5 * (a(i, j) + std::conj(a(j, i)));
      for (int p = 0; p < j; ++p) {
        sum -= l(i, p) * std::conj(l(j, p));
      }
      l(i, j) = sum / ljj;
    }
  }
  return l;
}

ComplexMatrix polar_unitary(const ComplexMatrix& a) {
  if (!a.square()) throw NotSquare("polar_unitary needs a square matrix");
  const int d = a.rows();
  Svd s = svd(a);
  const double cutoff = kRankTol * (s.sigma.empty() ? 0.0 : s.sigma[0]) * d;
  for (double x : s.sigma) {
    if (x <= cutoff) throw SingularInput("polar_unitary: rank-deficient input");
  }
  return s.u * adjoint(s.v);
}

ComplexMatrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw Error("haar_unitary: dimension must be positive");
  ComplexMatrix r(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) r(i, j) = rng.complex_gaussian();
  }
  ComplexMatrix q = ComplexMatrix::identity(d);
  std::vector<cplx> v(d);
  for (int k = 0; k < d; ++k) {
    double normx2 = 0.0;
    for (int i = k; i < d; ++i) normx2 += std::norm(r(i, k));
    const double normx = std::sqrt(normx2);
    if (normx == 0.0) continue;
    const cplx x0 = r(k, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0, 0.0) : x0 / std::abs(x0);
    const cplx alpha = -phase * normx;
    double vnorm2 = 0.0;
    for (int i = k; i < d; ++i) {
      v[i] = r(i, k);
      if (i == k) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // R <- H R on the trailing block.
    for (int j = k; j < d; ++j) {
      cplx wsum(0.0, 0.0);
      for (int i = k; i < d; ++i) wsum += std::conj(v[i]) * r(i, j);
      wsum *= beta;
      for (int i = k; i < d; ++i) r(i, j) -= wsum * v[i];
    }
    // Q <- Q H.
    for (int i = 0; i < d; ++i) {
      cplx wsum(0.0, 0.0);
      for (int j = k; j < d; ++j) wsum += q(i, j) * v[j];
      wsum *= beta;
      for (int j = k; j < d; ++j) q(i, j) -= wsum * std::conj(v[j]);
    }
  }
  // Fold the R-diagonal phases into Q so the distribution is Haar.
  for (int k = 0; k < d; ++k) {
    const cplx rkk = r(k, k);
    const double m = std::abs(rkk);
    const cplx ph = m == 0.0 ? cplx(1.0, 0.0) : rkk / m;
    for (int i = 0; i < d; ++i) q(i, k) *= ph;
  }
  return q;
}

ComplexMatrix haar_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(d, rng);
}

}  // namespace qchan
