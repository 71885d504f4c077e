#include "qchan/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qchan/kernels.hpp"

namespace qchan {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<cplx>& d) {
  const int n = static_cast<int>(d.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw DimensionMismatch("ragged initializer rows");
    }
    int j = 0;
    for (cplx v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const cplx& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch("matrix addition shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch("matrix subtraction shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& v : data_) {
    v = cplx(v.real() * s.real() - v.imag() * s.imag(),
             v.real() * s.imag() + v.imag() * s.real());
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product inner dimension mismatch");
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active().matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(),
                           b.cols());
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  }
  return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  }
  return r;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = std::conj(a(i, j));
  }
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  kernels::active().kron(a.data(), a.rows(), a.cols(), b.data(), b.rows(),
                         b.cols(), out.data());
  return out;
}

cplx trace(const ComplexMatrix& a) {
  if (!a.square()) throw NotSquare("trace of a non-square matrix");
  cplx t(0.0, 0.0);
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const cplx& v : a.entries()) {
    s += v.real() * v.real() + v.imag() * v.imag();
  }
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& v : a.entries()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("comparing matrices of different shape");
  }
  double m = 0.0;
  const std::size_t n = a.entries().size();
  for (std::size_t i = 0; i < n; ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_abs_diff(a, b) <= tol;
}

std::vector<cplx> vec(const ComplexMatrix& a) {
  std::vector<cplx> v(static_cast<std::size_t>(a.rows()) * a.cols());
  std::size_t idx = 0;
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) v[idx++] = a(i, j);
  }
  return v;
}

ComplexMatrix unvec(const std::vector<cplx>& v, int rows, int cols) {
  if (v.size() != static_cast<std::size_t>(rows) * cols) {
    throw DimensionMismatch("unvec length mismatch");
  }
  ComplexMatrix a(rows, cols);
  std::size_t idx = 0;
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) a(i, j) = v[idx++];
  }
  return a;
}

}  // namespace qchan
