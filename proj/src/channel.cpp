#include "qchan/channel.hpp"

#include <cmath>
#include <utility>

#include "qchan/kernels.hpp"

namespace qchan {

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : mat(std::move(m)) {
  if (!mat.square() || mat.rows() == 0) {
    throw DimensionMismatch("density matrix must be square and nonempty");
  }
  dim = mat.rows();
  if (!mat.is_finite()) throw Error("density matrix has non-finite entries");
  if (max_abs_diff(mat, adjoint(mat)) > tol) {
    throw NotHermitian("density matrix is not Hermitian");
  }
  if (std::abs(trace(mat) - cplx(1.0, 0.0)) > tol) {
    throw Error("density matrix trace differs from one");
  }
  const Eigh e = hermitian_eig(mat);
  if (e.values.back() < -tol) {
    throw NotPSD("density matrix has a negative eigenvalue");
  }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> ops)
    : kraus(std::move(ops)) {
  if (kraus.empty()) throw Error("channel needs at least one Kraus operator");
  dim = kraus.front().rows();
  for (const auto& a : kraus) {
    if (!a.square() || a.rows() != dim) {
      throw DimensionMismatch("Kraus operators must be square with equal dims");
    }
    if (!a.is_finite()) throw Error("Kraus operator has non-finite entries");
  }
  if (dim == 0) throw DimensionMismatch("zero-dimensional channel");
}

ChoiMatrix::ChoiMatrix(int d, ComplexMatrix m) : dim(d), mat(std::move(m)) {
  if (dim <= 0 || mat.rows() != dim * dim || mat.cols() != dim * dim) {
    throw DimensionMismatch("Choi matrix must be dim^2 x dim^2");
  }
  if (!mat.is_finite()) throw Error("Choi matrix has non-finite entries");
}

void ChoiMatrix::validate(double tol) const {
  if (max_abs_diff(mat, adjoint(mat)) > tol) {
    throw NotHermitian("Choi matrix not Hermitian");
  }
  const Eigh e = hermitian_eig(mat);
  if (e.values.back() < -tol) {
    throw NotPSD("Choi matrix has a negative eigenvalue");
  }
  // tr over the output (inner) factor of each d x d block must give I.
  ComplexMatrix pt(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int jp = 0; jp < dim; ++jp) {
      cplx s(0.0, 0.0);
      for (int i = 0; i < dim; ++i) s += mat(j * dim + i, jp * dim + i);
      pt(j, jp) = s;
    }
  }
  if (max_abs_diff(pt, ComplexMatrix::identity(dim)) > tol) {
    throw Error("Choi partial trace differs from identity");
  }
}

ValidationReport validate_channel(const KrausChannel& k, double tol) {
  ValidationReport rep;
  rep.dim = k.dim;
  rep.kraus_count = static_cast<int>(k.kraus.size());
  rep.tolerance = tol;
  ComplexMatrix tp(k.dim, k.dim);
  ComplexMatrix un(k.dim, k.dim);
  for (const auto& a : k.kraus) {
    const ComplexMatrix ad = adjoint(a);
    tp += ad * a;
    un += a * ad;
  }
  const ComplexMatrix eye = ComplexMatrix::identity(k.dim);
  rep.max_trace_preserving_deviation = max_abs_diff(tp, eye);
  rep.max_unital_deviation = max_abs_diff(un, eye);
  rep.trace_preserving = rep.max_trace_preserving_deviation <= tol;
  rep.unital = rep.max_unital_deviation <= tol;
  return rep;
}

ComplexMatrix apply_raw(const KrausChannel& k, const ComplexMatrix& m) {
  if (m.rows() != k.dim || m.cols() != k.dim) {
    throw DimensionMismatch("state dimension differs from channel dimension");
  }
  ComplexMatrix out(k.dim, k.dim);
  for (const auto& a : k.kraus) {
    out += a * m * adjoint(a);
  }
  return out;
}

DensityMatrix apply(const KrausChannel& k, const DensityMatrix& rho) {
  if (rho.dim != k.dim) {
    throw DimensionMismatch("state dimension differs from channel dimension");
  }
  return DensityMatrix(apply_raw(k, rho.mat));
}

bool is_unital(const KrausChannel& k, double tol) {
  ComplexMatrix un(k.dim, k.dim);
  for (const auto& a : k.kraus) un += a * adjoint(a);
  return max_abs_diff(un, ComplexMatrix::identity(k.dim)) <= tol;
}

KrausChannel compose(const KrausChannel& t, const KrausChannel& r) {
  if (t.dim != r.dim) {
    throw DimensionMismatch("composing channels of different dimension");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(t.kraus.size() * r.kraus.size());
  for (const auto& b : t.kraus) {
    for (const auto& a : r.kraus) ops.push_back(b * a);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel mix_channels(
    const std::vector<std::pair<double, KrausChannel>>& parts, double tol) {
  if (parts.empty()) throw BadWeights("mixture needs at least one part");
  double total = 0.0;
  const int dim = parts.front().second.dim;
  for (const auto& [w, ch] : parts) {
    if (w < 0.0) throw BadWeights("negative mixture weight");
    if (ch.dim != dim) {
      throw DimensionMismatch("mixing channels of different dimension");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > tol) {
    throw BadWeights("mixture weights do not sum to one");
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& [w, ch] : parts) {
    const double root = std::sqrt(w);
    for (const auto& a : ch.kraus) ops.push_back(root * a);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel tensor(const KrausChannel& t, const KrausChannel& s) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(t.kraus.size() * s.kraus.size());
  for (const auto& a : t.kraus) {
    for (const auto& b : s.kraus) ops.push_back(kron(a, b));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel tensor_power(const KrausChannel& t, int n, int dim_cap) {
  if (n < 1) throw Error("tensor_power: n must be >= 1");
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= t.dim;
    if (total > dim_cap) {
      throw DimensionCapExceeded("tensor power exceeds the dimension cap");
    }
  }
  KrausChannel out = t;
  for (int i = 1; i < n; ++i) out = tensor(out, t);
  return out;
}

ChoiMatrix to_choi(const KrausChannel& k) {
  const int d2 = k.dim * k.dim;
  ComplexMatrix j(d2, d2);
  for (const auto& a : k.kraus) {
    const std::vector<cplx> v = vec(a);
    kernels::active().rank1_update(cplx(1.0, 0.0), v.data(), v.data(),
                                   j.data(), d2, d2);
  }
  return ChoiMatrix(k.dim, std::move(j));
}

KrausChannel kraus_from_choi(const ChoiMatrix& j, double tol) {
  const int d = j.dim;
  const int d2 = d * d;
  const Eigh e = hermitian_eig(j.mat);
  const double lmax = e.values.empty() ? 0.0 : std::max(e.values.front(), 0.0);
  if (e.values.back() < -tol) {
    throw NotPSD("Choi matrix has a negative eigenvalue");
  }
  const double cutoff = tol * lmax * d2;
  std::vector<ComplexMatrix> ops;
  for (int idx = 0; idx < d2; ++idx) {
    const double lambda = e.values[idx];
    if (lambda <= cutoff) continue;
    const double root = std::sqrt(lambda);
    std::vector<cplx> v(d2);
    for (int i = 0; i < d2; ++i) v[i] = root * e.vectors(i, idx);
    ops.push_back(unvec(v, d, d));
  }
  if (ops.empty()) {
    throw NotPSD("Choi matrix has no positive eigenvalues above tolerance");
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_unital_channel(int dim, int num_unitaries, Rng& rng) {
  if (num_unitaries < 1) throw Error("need at least one unitary");
  const std::vector<double> w = rng.dirichlet(num_unitaries);
  std::vector<ComplexMatrix> ops;
  ops.reserve(num_unitaries);
  for (int i = 0; i < num_unitaries; ++i) {
    ops.push_back(std::sqrt(w[i]) * haar_unitary(dim, rng));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_unital_channel(int dim, int num_unitaries,
                                   std::uint64_t seed) {
  Rng rng(seed);
  return random_unital_channel(dim, num_unitaries, rng);
}

DensityMatrix random_density(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
  }
  ComplexMatrix rho = g * adjoint(g);
  const double t = trace(rho).real();
  rho *= cplx(1.0 / t, 0.0);
  return DensityMatrix(std::move(rho));
}

}  // namespace qchan
