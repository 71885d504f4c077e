#include <cstddef>

#include "qchan/kernels.hpp"

// Reference kernels.  Complex arithmetic is written out by hand so the
// vector variants can reproduce the same operation structure; std::complex
// operator* would route through __muldc3 with NaN fixups we never need
// (inputs are checked finite at the API boundary).

namespace qchan::kernels {
namespace {

inline cplx cmul(cplx a, cplx b) {
  return cplx(a.real() * b.real() - a.imag() * b.imag(),
              a.real() * b.imag() + a.imag() * b.real());
}

inline cplx cmul_conj_rhs(cplx a, cplx b) {  // a * conj(b)
  return cplx(a.real() * b.real() + a.imag() * b.imag(),
              a.imag() * b.real() - a.real() * b.imag());
}

void matmul_scalar(const cplx* a, const cplx* b, cplx* c, int m, int k,
                   int n) {
  const std::size_t un = static_cast<std::size_t>(n);
  for (int i = 0; i < m; ++i) {
    cplx* crow = c + static_cast<std::size_t>(i) * un;
    for (int j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
    const cplx* arow = a + static_cast<std::size_t>(i) * static_cast<std::size_t>(k);
    for (int p = 0; p < k; ++p) {
      const cplx aip = arow[p];
      if (aip.real() == 0.0 && aip.imag() == 0.0) continue;
      const cplx* brow = b + static_cast<std::size_t>(p) * un;
      for (int j = 0; j < n; ++j) {
        crow[j] += cmul(aip, brow[j]);
      }
    }
  }
}

void kron_scalar(const cplx* a, int ar, int ac, const cplx* b, int br, int bc,
                 cplx* out) {
  const std::size_t ocols = static_cast<std::size_t>(ac) * bc;
  for (int i = 0; i < ar; ++i) {
    for (int j = 0; j < ac; ++j) {
      const cplx aij = a[static_cast<std::size_t>(i) * ac + j];
      for (int p = 0; p < br; ++p) {
        cplx* dst = out + (static_cast<std::size_t>(i) * br + p) * ocols +
                    static_cast<std::size_t>(j) * bc;
        const cplx* src = b + static_cast<std::size_t>(p) * bc;
        for (int q = 0; q < bc; ++q) dst[q] = cmul(aij, src[q]);
      }
    }
  }
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += cmul(alpha, x[i]);
}

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return cplx(re, im);
}

void rank1_update_scalar(cplx alpha, const cplx* x, const cplx* y, cplx* a,
                         int m, int n) {
  const std::size_t un = static_cast<std::size_t>(n);
  for (int i = 0; i < m; ++i) {
    const cplx axi = cmul(alpha, x[i]);
    cplx* arow = a + static_cast<std::size_t>(i) * un;
    for (int j = 0; j < n; ++j) {
      arow[j] += cmul_conj_rhs(axi, y[j]);
    }
  }
}

void rot_scalar(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
  const cplx sc = std::conj(s);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = cplx(c * xi.real(), c * xi.imag()) + cmul(s, yi);
    y[i] = cplx(c * yi.real(), c * yi.imag()) - cmul(sc, xi);
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels table = {
      "scalar",     matmul_scalar,       kron_scalar,
      axpy_scalar,  dotc_scalar,         rank1_update_scalar,
      rot_scalar,
  };
  return table;
}

}  // namespace qchan::kernels
