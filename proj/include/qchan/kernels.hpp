#pragma once

#include <cstddef>

#include "qchan/common.hpp"

namespace qchan::kernels {

// Dense complex kernels behind the matrix layer.  Each entry has a scalar
// reference implementation and, on x86-64 with AVX2+FMA, a vectorized one.
// The active table is picked once at startup: QCHAN_KERNELS=scalar|avx2
// overrides autodetection.  Variants agree with the reference to roundoff
// (accumulation order differs), which the equivalence tests pin down.
struct Kernels {
  const char* name;

  // c = a * b, row-major; a is m x k, b is k x n, c is m x n.  No aliasing.
  void (*matmul)(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);

  // Kronecker product, row-major; out is (ar*br) x (ac*bc).  Left factor
  // indexes blocks.
  void (*kron)(const cplx* a, int ar, int ac, const cplx* b, int br, int bc,
               cplx* out);

  // y += alpha * x.
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);

  // sum_i conj(x[i]) * y[i].
  cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);

  // a += alpha * x * y^dag, row-major; a is m x n, x has m entries, y has n.
  void (*rank1_update)(cplx alpha, const cplx* x, const cplx* y, cplx* a,
                       int m, int n);

  // Plane rotation with real c: (x, y) <- (c*x + s*y, -conj(s)*x + c*y).
  void (*rot)(cplx* x, cplx* y, std::size_t n, double c, cplx s);
};

/// Table selected for this process (autodetected or forced via env/set_active).
const Kernels& active();

/// Always the scalar reference table.
const Kernels& scalar_kernels();

/// AVX2 table, or nullptr when not compiled in or not supported by the CPU.
const Kernels* avx2_kernels();

/// Force a table by name ("scalar", "avx2"); throws qchan::Error if the
/// requested table is unavailable.  Intended for tests.
void set_active(const char* name);

}  // namespace qchan::kernels
