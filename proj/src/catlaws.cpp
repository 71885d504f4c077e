#include "qchan/catlaws.hpp"

#include <algorithm>

namespace qchan {

LawReport check_identity_law(const KrausChannel& t, int samples,
                             std::uint64_t seed, double tol) {
  const KrausChannel id = KrausChannel::identity(t.dim);
  const ComplexMatrix jt = to_choi(t).mat;
  double dev = std::max(max_abs_diff(to_choi(compose(t, id)).mat, jt),
                        max_abs_diff(to_choi(compose(id, t)).mat, jt));
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = random_density(t.dim, rng);
    const ComplexMatrix lhs = apply_raw(compose(t, id), rho.mat);
    const ComplexMatrix rhs = apply_raw(compose(id, t), rho.mat);
    const ComplexMatrix direct = apply_raw(t, rho.mat);
    dev = std::max({dev, max_abs_diff(lhs, direct), max_abs_diff(rhs, direct)});
  }
  return LawReport{"identity", dev, samples, dev <= tol, tol};
}

LawReport check_associativity(const KrausChannel& r, const KrausChannel& t,
                              const KrausChannel& v, double tol) {
  if (r.dim != t.dim || t.dim != v.dim) {
    throw DimensionMismatch("associativity check needs equal dimensions");
  }
  const ComplexMatrix lhs = to_choi(compose(v, compose(t, r))).mat;
  const ComplexMatrix rhs = to_choi(compose(compose(v, t), r)).mat;
  const double dev = max_abs_diff(lhs, rhs);
  return LawReport{"associativity", dev, 0, dev <= tol, tol};
}

LawReport check_bifunctor_law(const KrausChannel& t, const KrausChannel& s,
                              int samples, std::uint64_t seed, double tol) {
  const KrausChannel ts = tensor(t, s);
  Rng rng(seed);
  double dev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const DensityMatrix rho = random_density(t.dim, rng);
    const DensityMatrix sigma = random_density(s.dim, rng);
    const ComplexMatrix lhs = kron(apply_raw(t, rho.mat), apply_raw(s, sigma.mat));
    const ComplexMatrix rhs = apply_raw(ts, kron(rho.mat, sigma.mat));
    dev = std::max(dev, max_abs_diff(lhs, rhs));
  }
  return LawReport{"bifunctor", dev, samples, dev <= tol, tol};
}

LawReport check_unitality_power(const KrausChannel& t, int n, double tol,
                                int dim_cap) {
  if (!is_unital(t, tol)) {
    throw NotUnital("unitality-power check needs a unital channel");
  }
  const KrausChannel tn = tensor_power(t, n, dim_cap);
  const ComplexMatrix image =
      apply_raw(tn, ComplexMatrix::identity(tn.dim));
  const double dev = max_abs_diff(image, ComplexMatrix::identity(tn.dim));
  return LawReport{"unitality_power", dev, 0, dev <= tol, tol};
}

long long chain_copy_count(int n) {
  if (n < 1) throw Error("chain_copy_count: n must be >= 1");
  const long long ln = n;
  return ln * (ln + 1) / 2;
}

}  // namespace qchan
