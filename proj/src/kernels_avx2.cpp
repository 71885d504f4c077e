#include "qchan/kernels.hpp"

// AVX2+FMA variants.  This translation unit is compiled with -mavx2 -mfma on
// x86-64 and is only entered after the dispatcher has checked CPU support.
// Layout: std::complex<double> is two doubles (re, im) interleaved, so one
// __m256d holds two complex numbers.

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cstddef>

namespace qchan::kernels {
namespace {

// (ar + i*ai) * v for two packed complex values in v.
// ar, ai are broadcast lanes of the scalar's components.
inline __m256d cmul_scalar_vec(__m256d ar, __m256d ai, __m256d v) {
  const __m256d vswap = _mm256_permute_pd(v, 0x5);  // [im0, re0, im1, re1]
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, vswap));
}

inline cplx cmul1(cplx a, cplx b) {
  return cplx(a.real() * b.real() - a.imag() * b.imag(),
              a.real() * b.imag() + a.imag() * b.real());
}

void matmul_avx2(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  const std::size_t un = static_cast<std::size_t>(n);
  const int n2 = n & ~1;
  for (int i = 0; i < m; ++i) {
    double* crow = reinterpret_cast<double*>(c + static_cast<std::size_t>(i) * un);
    for (int j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    const cplx* arow = a + static_cast<std::size_t>(i) * static_cast<std::size_t>(k);
    for (int p = 0; p < k; ++p) {
      const cplx aip = arow[p];
      const __m256d ar = _mm256_set1_pd(aip.real());
      const __m256d ai = _mm256_set1_pd(aip.imag());
      const double* brow =
          reinterpret_cast<const double*>(b + static_cast<std::size_t>(p) * un);
      int j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d acc = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j,
                         _mm256_add_pd(acc, cmul_scalar_vec(ar, ai, bv)));
      }
      if (j < n) {
        const cplx prod =
            cmul1(aip, b[static_cast<std::size_t>(p) * un + j]);
        crow[2 * j] += prod.real();
        crow[2 * j + 1] += prod.imag();
      }
    }
  }
}

// dst[q] = alpha * src[q] for a row of length n (no accumulate).
inline void scale_row(cplx alpha, const cplx* src, cplx* dst, int n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const int n2 = n & ~1;
  const double* s = reinterpret_cast<const double*>(src);
  double* d = reinterpret_cast<double*>(dst);
  int q = 0;
  for (; q < n2; q += 2) {
    _mm256_storeu_pd(d + 2 * q,
                     cmul_scalar_vec(ar, ai, _mm256_loadu_pd(s + 2 * q)));
  }
  if (q < n) dst[q] = cmul1(alpha, src[q]);
}

void kron_avx2(const cplx* a, int ar, int ac, const cplx* b, int br, int bc,
               cplx* out) {
  const std::size_t ocols = static_cast<std::size_t>(ac) * bc;
  for (int i = 0; i < ar; ++i) {
    for (int j = 0; j < ac; ++j) {
      const cplx aij = a[static_cast<std::size_t>(i) * ac + j];
      for (int p = 0; p < br; ++p) {
        cplx* dst = out + (static_cast<std::size_t>(i) * br + p) * ocols +
                    static_cast<std::size_t>(j) * bc;
        scale_row(aij, b + static_cast<std::size_t>(p) * bc, dst, bc);
      }
    }
  }
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const std::size_t n2 = n & ~std::size_t{1};
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    _mm256_storeu_pd(ys + 2 * i,
                     _mm256_add_pd(yv, cmul_scalar_vec(ar, ai, xv)));
  }
  if (i < n) y[i] += cmul1(alpha, x[i]);
}

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  // conj(x)*y: re = xr*yr + xi*yi, im = xr*yi - xi*yr.
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const std::size_t n2 = n & ~std::size_t{1};
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    const __m256d yswap = _mm256_permute_pd(yv, 0x5);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);     // xr*yr | xi*yi pairs
    acc_im = _mm256_fmadd_pd(xv, yswap, acc_im);  // xr*yi | xi*yr pairs
  }
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  double re = re4[0] + re4[1] + re4[2] + re4[3];
  double im = (im4[0] - im4[1]) + (im4[2] - im4[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return cplx(re, im);
}

void rank1_update_avx2(cplx alpha, const cplx* x, const cplx* y, cplx* a,
                       int m, int n) {
  const std::size_t un = static_cast<std::size_t>(n);
  const int n2 = n & ~1;
  const double* ys = reinterpret_cast<const double*>(y);
  const long long sign_bit = static_cast<long long>(0x8000000000000000ULL);
  const __m256d conj_mask =
      _mm256_castsi256_pd(_mm256_set_epi64x(sign_bit, 0, sign_bit, 0));
  for (int i = 0; i < m; ++i) {
    const cplx axi = cmul1(alpha, x[i]);
    const __m256d ar = _mm256_set1_pd(axi.real());
    const __m256d ai = _mm256_set1_pd(axi.imag());
    double* arow = reinterpret_cast<double*>(a + static_cast<std::size_t>(i) * un);
    int j = 0;
    for (; j < n2; j += 2) {
      const __m256d yv =
          _mm256_xor_pd(_mm256_loadu_pd(ys + 2 * j), conj_mask);
      const __m256d acc = _mm256_loadu_pd(arow + 2 * j);
      _mm256_storeu_pd(arow + 2 * j,
                       _mm256_add_pd(acc, cmul_scalar_vec(ar, ai, yv)));
    }
    for (; j < n; ++j) {
      a[static_cast<std::size_t>(i) * un + j] += cmul1(axi, std::conj(y[j]));
    }
  }
}

void rot_avx2(cplx* x, cplx* y, std::size_t n, double c, cplx s) {
  const __m256d cv = _mm256_set1_pd(c);
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  // conj(s) has negated imaginary part.
  const __m256d scr = sr;
  const __m256d sci = _mm256_set1_pd(-s.imag());
  const std::size_t n2 = n & ~std::size_t{1};
  double* xs = reinterpret_cast<double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    const __m256d xnew =
        _mm256_fmadd_pd(cv, xv, cmul_scalar_vec(sr, si, yv));
    const __m256d ynew =
        _mm256_fmsub_pd(cv, yv, cmul_scalar_vec(scr, sci, xv));
    _mm256_storeu_pd(xs + 2 * i, xnew);
    _mm256_storeu_pd(ys + 2 * i, ynew);
  }
  if (i < n) {
    const cplx xi = x[i];
    const cplx yi = y[i];
    x[i] = cplx(c * xi.real(), c * xi.imag()) + cmul1(s, yi);
    y[i] = cplx(c * yi.real(), c * yi.imag()) - cmul1(std::conj(s), xi);
  }
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels table = {
      "avx2",     matmul_avx2,       kron_avx2,
      axpy_avx2,  dotc_avx2,         rank1_update_avx2,
      rot_avx2,
  };
#if defined(__GNUC__) || defined(__clang__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return &table;
  }
#endif
  return nullptr;
}

}  // namespace qchan::kernels

#else  // no AVX2 at compile time (non-x86 or flags missing)

namespace qchan::kernels {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace qchan::kernels

#endif
