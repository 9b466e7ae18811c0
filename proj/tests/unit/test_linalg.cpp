#include <doctest.h>

#include "ssw/linalg.hpp"
#include "support/oracles.hpp"

using namespace ssw;

namespace {

ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

const double kTwoPi = 2.0 * 3.14159265358979323846;

}  // namespace

TEST_CASE("hermitian functions on diagonal matrices") {
  ComplexMatrix x = diag2(4.0, 0.25);
  CHECK((hermitian_sqrt(x) - diag2(2.0, 0.5)).norm() < 1e-12);
  CHECK((spectral_restrict(x, 0.0, 1.0) - diag2(0.0, 0.25)).norm() < 1e-12);

  ComplexMatrix y = diag2(std::exp(kTwoPi / 2 * 2), std::exp(-kTwoPi / 2 * 2));
  // eigenvalues e^{2 pi}, e^{-2 pi}: the unit-modulus flow at t = 1 closes
  ComplexMatrix flow = hermitian_power_it(y, 1.0);
  CHECK((flow - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("hermitian function errors") {
  ComplexMatrix x = diag2(1.0, -2.0);
  CHECK_THROWS_AS(hermitian_sqrt(x), Error);
  CHECK_THROWS_AS(hermitian_log(x), Error);
  ComplexMatrix nh(2, 2);
  nh << 1, 2, 3, 4;
  CHECK_THROWS_AS(hermitian_eig(nh), Error);
}

TEST_CASE("spectral calculus matches the scalar map on random Hermitian input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Index n = 2 + Index(rng() % 15);  // up to 16
    ComplexMatrix x = random_hermitian(n, rng);
    ComplexMatrix e = hermitian_exp(x);
    CHECK((e - oracle::expm_taylor(x)).norm() <= 1e-10 * std::max(1.0, e.norm()));
    CHECK((hermitian_log(e) - x).norm() <= 1e-9 * std::max(1.0, x.norm()));
    ComplexMatrix shifted = x + (x.norm() + 1.0) * ComplexMatrix::Identity(n, n);
    ComplexMatrix r = hermitian_sqrt(shifted);
    CHECK((r * r - shifted).norm() <= 1e-10 * std::max(1.0, shifted.norm()));
    CHECK((hermitian_inverse_sqrt(shifted) * r - ComplexMatrix::Identity(n, n)).norm() <= 1e-9);
    ComplexMatrix u = hermitian_power_it(shifted, 0.7);
    CHECK(is_unitary(u, 1e-10));
    CHECK((hermitian_power_it(shifted, 0.3) * hermitian_power_it(shifted, 0.4) - u).norm() <= 1e-10);
  }
}

TEST_CASE("antilinear composition and adjoint follow the matrix rules") {
  std::mt19937_64 rng(11);
  Index n = 4;
  ComplexMatrix a1 = random_hermitian(n, rng) + Complex(0, 1) * random_hermitian(n, rng);
  ComplexMatrix a2 = random_hermitian(n, rng) + Complex(0, 1) * random_hermitian(n, rng);
  AntilinearOperator t1(a1), t2(a2);

  ComplexVector v = ComplexVector::Random(n);
  CHECK((t2(t1(v)) - compose(t2, t1) * v).norm() < 1e-12 * std::max(1.0, v.norm()));

  // adjoint oracle from the inner-product definition
  ComplexMatrix adj = oracle::antilinear_adjoint_matrix(
      [&](const ComplexVector& u) { return t1(u); }, n);
  CHECK((adj - t1.adjoint().coeff()).norm() < 1e-12);

  // <T* u, w> = <T w, u> on random pairs
  for (int k = 0; k < 10; ++k) {
    ComplexVector u = ComplexVector::Random(n), w = ComplexVector::Random(n);
    Complex lhs = (t1.adjoint()(u)).adjoint() * w;
    Complex rhs = (t1(w)).adjoint() * u;
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("polar decomposition of plain conjugation") {
  AntilinearOperator s = AntilinearOperator::conjugation(3);
  PolarAntilinear p = polar_antilinear(s);
  CHECK((p.conjugation.coeff() - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((p.modular - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("polar decomposition of the off-diagonal involution") {
  ComplexMatrix sm(2, 2);
  sm << 0, 0.5, 2, 0;
  AntilinearOperator s(sm);
  // S o S = 1 by direct multiplication
  CHECK((s.squared() - ComplexMatrix::Identity(2, 2)).norm() < 1e-14);
  PolarAntilinear p = polar_antilinear(s);
  CHECK((p.modular - diag2(4.0, 0.25)).norm() < 1e-12);
  ComplexMatrix jexp(2, 2);
  jexp << 0, 1, 1, 0;
  CHECK((p.conjugation.coeff() - jexp).norm() < 1e-12);
  // S = J Delta^{1/2}
  ComplexMatrix rebuilt = compose(p.conjugation, hermitian_sqrt(p.modular)).coeff();
  CHECK((rebuilt - sm).norm() < 1e-12);
}

TEST_CASE("polar decomposition of the upper triangular involution") {
  ComplexMatrix sm(2, 2);
  sm << 1.0, Complex(0, 2), 0.0, 1.0;
  AntilinearOperator s(sm);
  // independent route: Delta = S* S with the adjoint taken from the
  // inner-product definition
  ComplexMatrix adj = oracle::antilinear_adjoint_matrix(
      [&](const ComplexVector& u) { return s(u); }, 2);
  ComplexMatrix delta_oracle = adj * sm.conjugate();
  ComplexMatrix expected(2, 2);
  expected << 1.0, Complex(0, -2), Complex(0, 2), 5.0;
  CHECK((delta_oracle - expected).norm() < 1e-13);

  PolarAntilinear p = polar_antilinear(s);
  CHECK((p.modular - expected).norm() < 1e-12);
  HermitianEigen eig = hermitian_eig(p.modular);
  const double s2 = 2.0 * std::sqrt(2.0);
  CHECK(eig.values[0] == doctest::Approx(3.0 - s2).epsilon(1e-12));
  CHECK(eig.values[1] == doctest::Approx(3.0 + s2).epsilon(1e-12));
  // J Delta J = Delta^{-1}
  ComplexMatrix jdj = compose(compose(p.conjugation, p.modular), p.conjugation);
  ComplexMatrix dinv = p.modular.partialPivLu().solve(ComplexMatrix::Identity(2, 2));
  CHECK((jdj - dinv).norm() < 1e-10);
}

TEST_CASE("polar decomposition errors") {
  ComplexMatrix notinv(2, 2);
  notinv << 0, 1, 1, 1;
  CHECK_THROWS_AS(polar_antilinear(AntilinearOperator(notinv)), Error);
}

TEST_CASE("polar recovers randomly built (J, Delta) pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Index n = 2 + Index(rng() % 7);
    Index pairs = n / 2;
    ComplexMatrix j0 = ComplexMatrix::Zero(n, n);
    RealVector d0 = RealVector::Ones(n);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    for (Index p = 0; p < pairs; ++p) {
      j0(2 * p, 2 * p + 1) = 1;
      j0(2 * p + 1, 2 * p) = 1;
      double lg = uni(rng);
      d0[2 * p] = std::exp(lg);
      d0[2 * p + 1] = std::exp(-lg);
    }
    if (n % 2 == 1) j0(n - 1, n - 1) = 1;
    ComplexMatrix u = random_unitary(n, rng);
    ComplexMatrix jm = u * j0 * u.transpose();
    ComplexMatrix delta = u * d0.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint();
    AntilinearOperator j(jm);
    AntilinearOperator s = compose(j, hermitian_sqrt(delta));
    PolarAntilinear rec = polar_antilinear(s);
    CHECK((rec.modular - delta).norm() <= 1e-9 * std::max(1.0, delta.norm()));
    CHECK((rec.conjugation.coeff() - jm).norm() <= 1e-9 * std::max(1.0, jm.norm()));
  }
}

TEST_CASE("nullspace basics") {
  CHECK(nullspace(ComplexMatrix::Identity(3, 3)).basis.cols() == 0);
  NullspaceResult z = nullspace(ComplexMatrix::Zero(2, 2));
  CHECK(z.basis.cols() == 2);
  CHECK((z.basis.adjoint() * z.basis - ComplexMatrix::Identity(2, 2)).norm() < 1e-12);

  ComplexMatrix ones(2, 2);
  ones << 1, 1, 1, 1;
  NullspaceResult r = nullspace(ones);
  REQUIRE(r.basis.cols() == 1);
  ComplexVector expected(2);
  expected << 1, -1;
  expected.normalize();
  Complex overlap = (expected.adjoint() * r.basis.col(0))(0);
  CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-12);
  CHECK(r.gap_ok);
}

TEST_CASE("an ambiguous singular-value split is reported, not hidden") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 2e-9;
  m(2, 2) = 0.5e-9;
  NullspaceResult r = nullspace(m, 1e-9);
  CHECK(!r.gap_ok);
  CHECK(r.gap < 1e3);
}

TEST_CASE("nullspace dimension equals dim minus rank on random rank-deficient input") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Index n = 3 + Index(rng() % 8);
    Index rank = Index(rng() % n);
    ComplexMatrix a(n, rank), b(rank, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < rank; ++j) {
        a(i, j) = Complex(gauss(rng), gauss(rng));
        b(j, i) = Complex(gauss(rng), gauss(rng));
      }
    ComplexMatrix m = rank == 0 ? ComplexMatrix::Zero(n, n) : ComplexMatrix(a * b);
    NullspaceResult r = nullspace(m, 1e-9);
    CHECK(r.basis.cols() == n - rank);
    for (Index c = 0; c < r.basis.cols(); ++c) {
      CHECK((m * r.basis.col(c)).norm() <= 1e-9 * std::max(1.0, m.norm()));
    }
  }
}
