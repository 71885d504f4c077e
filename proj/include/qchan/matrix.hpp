#pragma once

#include <initializer_list>
#include <vector>

#include "qchan/common.hpp"
#include "qchan/errors.hpp"

namespace qchan {

/// Dense row-major complex matrix.  The universal numeric carrier for
/// channels, Choi matrices, permutation matrices and states.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, cplx(0.0, 0.0)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
  }
  ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows < 0 || cols < 0 ||
        data_.size() != static_cast<std::size_t>(rows) * cols) {
      throw DimensionMismatch("entry count does not match rows x cols");
    }
  }

  static ComplexMatrix identity(int n);
  static ComplexMatrix diag(const std::vector<cplx>& d);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  cplx operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  const cplx* data() const { return data_.data(); }
  cplx* data() { return data_.data(); }
  const std::vector<cplx>& entries() const { return data_; }

  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  bool operator==(const ComplexMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

/// Kronecker product; the left factor indexes blocks.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// Column-stacking vectorization and its inverse.
std::vector<cplx> vec(const ComplexMatrix& a);
ComplexMatrix unvec(const std::vector<cplx>& v, int rows, int cols);

}  // namespace qchan
