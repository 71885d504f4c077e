#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qchan/matrix.hpp"
#include "qchan/rng.hpp"

using namespace qchan;

namespace {

ComplexMatrix random_matrix(Rng& rng, int r, int c) {
  ComplexMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m(i, j) = rng.complex_gaussian();
  }
  return m;
}

}  // namespace

TEST_CASE("kron identity and shape cases") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(approx_equal(kron(i2, i2), ComplexMatrix::identity(4), 0.0));

  Rng rng(7);
  const ComplexMatrix a = random_matrix(rng, 2, 3);
  const ComplexMatrix b = random_matrix(rng, 4, 5);
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 8);
  CHECK(k.cols() == 15);

  const ComplexMatrix d1 = ComplexMatrix::diag({cplx(1, 0), cplx(2, 0)});
  const ComplexMatrix d2 = ComplexMatrix::diag({cplx(3, 0), cplx(4, 0)});
  const ComplexMatrix expect =
      ComplexMatrix::diag({cplx(3, 0), cplx(4, 0), cplx(6, 0), cplx(8, 0)});
  CHECK(approx_equal(kron(d1, d2), expect, 0.0));
}

TEST_CASE("kron block convention: left factor indexes blocks") {
  ComplexMatrix a(2, 2);
  a(0, 1) = cplx(1, 0);  // e_0 e_1^T
  ComplexMatrix b(2, 2);
  b(1, 0) = cplx(5, 0);
  const ComplexMatrix k = kron(a, b);
  CHECK(k(1, 2) == cplx(5, 0));  // block (0,1), inner (1,0)
  CHECK(max_abs(k) == 5.0);
}

TEST_CASE("kron properties") {
  Rng rng(11);
  const ComplexMatrix a = random_matrix(rng, 2, 3);
  const ComplexMatrix b = random_matrix(rng, 3, 2);
  const ComplexMatrix c = random_matrix(rng, 2, 2);

  SUBCASE("associativity") {
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
  }
  SUBCASE("adjoint distributes") {
    CHECK(max_abs_diff(kron(adjoint(a), adjoint(b)), adjoint(kron(a, b))) <
          1e-14);
  }
  SUBCASE("bilinearity in the left argument") {
    const ComplexMatrix a2 = random_matrix(rng, 2, 3);
    const ComplexMatrix lhs = kron(a + a2, b);
    const ComplexMatrix rhs = kron(a, b) + kron(a2, b);
    CHECK(max_abs_diff(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("adjoint") {
  CHECK(approx_equal(adjoint(ComplexMatrix::identity(3)),
                     ComplexMatrix::identity(3), 0.0));

  const ComplexMatrix m =
      ComplexMatrix::from_rows({{cplx(0, 0), cplx(0, 1)},
                                {cplx(0, 0), cplx(0, 0)}});
  const ComplexMatrix expect =
      ComplexMatrix::from_rows({{cplx(0, 0), cplx(0, 0)},
                                {cplx(0, -1), cplx(0, 0)}});
  CHECK(approx_equal(adjoint(m), expect, 0.0));

  Rng rng(3);
  const ComplexMatrix r = random_matrix(rng, 4, 6);
  CHECK(adjoint(adjoint(r)) == r);
}

TEST_CASE("matmul dimension checks") {
  const ComplexMatrix a(2, 3);
  const ComplexMatrix b(2, 3);
  CHECK_THROWS_AS(a * b, DimensionMismatch);
}

TEST_CASE("vec is column-stacking and unvec inverts it") {
  const ComplexMatrix m =
      ComplexMatrix::from_rows({{cplx(1, 0), cplx(3, 0)},
                                {cplx(2, 0), cplx(4, 0)}});
  const std::vector<cplx> v = vec(m);
  CHECK(v[0] == cplx(1, 0));
  CHECK(v[1] == cplx(2, 0));
  CHECK(v[2] == cplx(3, 0));
  CHECK(v[3] == cplx(4, 0));
  CHECK(unvec(v, 2, 2) == m);
}

TEST_CASE("norms and finiteness") {
  const ComplexMatrix m =
      ComplexMatrix::from_rows({{cplx(3, 4), cplx(0, 0)}});
  CHECK(frobenius_norm(m) == doctest::Approx(5.0));
  CHECK(max_abs(m) == doctest::Approx(5.0));
  CHECK(m.is_finite());

  ComplexMatrix bad(1, 1);
  bad(0, 0) = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK(!bad.is_finite());
}
