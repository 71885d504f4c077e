#pragma once

// Shared fixtures: the standing example channels, built directly from their
// definitions (independent of the bundled data files).

#include <cmath>

#include "qchan/channel.hpp"

namespace qchan::testutil {

inline ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{cplx(0, 0), cplx(1, 0)},
                                   {cplx(1, 0), cplx(0, 0)}});
}

inline ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{cplx(0, 0), cplx(0, -1)},
                                   {cplx(0, 1), cplx(0, 0)}});
}

inline ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 0)},
                                   {cplx(0, 0), cplx(-1, 0)}});
}

/// Completely depolarizing qubit channel, Kraus {I, X, Y, Z} / 2.
inline KrausChannel depolarizing_qubit() {
  const cplx h(0.5, 0.0);
  return KrausChannel({h * ComplexMatrix::identity(2), h * pauli_x(),
                       h * pauli_y(), h * pauli_z()});
}

/// Amplitude damping with decay gamma.
inline KrausChannel amplitude_damping(double gamma) {
  const double s = std::sqrt(1.0 - gamma);
  const double r = std::sqrt(gamma);
  return KrausChannel({ComplexMatrix::from_rows({{cplx(1, 0), cplx(0, 0)},
                                                 {cplx(0, 0), cplx(s, 0)}}),
                       ComplexMatrix::from_rows({{cplx(0, 0), cplx(r, 0)},
                                                 {cplx(0, 0), cplx(0, 0)}})});
}

/// Werner-Holevo qutrit channel T(rho) = (tr(rho) I - transpose(rho)) / 2,
/// Kraus set (E_ij - E_ji)/sqrt(2) over i < j.
inline KrausChannel werner_holevo3() {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      ComplexMatrix a(3, 3);
      a(i, j) = cplx(r, 0.0);
      a(j, i) = cplx(-r, 0.0);
      ops.push_back(std::move(a));
    }
  }
  return KrausChannel(std::move(ops));
}

/// The map formula applied entrywise; the oracle counterpart of
/// werner_holevo3() for Choi-based comparisons.
inline ComplexMatrix werner_holevo3_map(const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::identity(3);
  out *= trace(rho);
  out -= transpose(rho);
  out *= cplx(0.5, 0.0);
  return out;
}

/// |0><0| of dimension d.
inline DensityMatrix ground_state(int d) {
  ComplexMatrix m(d, d);
  m(0, 0) = cplx(1.0, 0.0);
  return DensityMatrix(std::move(m));
}

}  // namespace qchan::testutil
