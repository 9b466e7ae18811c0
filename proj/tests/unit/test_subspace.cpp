#include <string>
#include <doctest.h>

#include "ssw/subspace.hpp"

using namespace ssw;

namespace {

ComplexMatrix c2_basis() {
  ComplexMatrix b(2, 2);
  b << Complex(1, 0), Complex(0, 1), Complex(0, 0), Complex(1, 0);
  return b;
}

}  // namespace

TEST_CASE("the real form of C^n is standard with trivial modular data") {
  Index n = 3;
  StandardSubspace h = StandardSubspace::from_vectors(ComplexMatrix::Identity(n, n));
  CHECK((h.tomita().coeff() - ComplexMatrix::Identity(n, n)).norm() < 1e-13);
  CHECK((h.conjugation().coeff() - ComplexMatrix::Identity(n, n)).norm() < 1e-13);
  CHECK((h.modular() - ComplexMatrix::Identity(n, n)).norm() < 1e-13);
  for (double t : {0.0, 0.7, 2.0}) {
    CHECK((h.modular_flow(t) - ComplexMatrix::Identity(n, n)).norm() < 1e-12);
  }
}

TEST_CASE("the worked C^2 subspace") {
  StandardSubspace h = StandardSubspace::from_vectors(c2_basis());
  ComplexMatrix sexp(2, 2);
  sexp << 1.0, Complex(0, 2), 0.0, 1.0;
  CHECK((h.tomita().coeff() - sexp).norm() < 1e-12);
  ComplexMatrix dexp(2, 2);
  dexp << 1.0, Complex(0, -2), Complex(0, 2), 5.0;
  CHECK((h.modular() - dexp).norm() < 1e-11);
  HermitianEigen eig = hermitian_eig(h.modular());
  CHECK(eig.values[0] == doctest::Approx(3 - 2 * std::sqrt(2.0)).epsilon(1e-11));
  CHECK(eig.values[1] == doctest::Approx(3 + 2 * std::sqrt(2.0)).epsilon(1e-11));
  CHECK(std::abs(h.modular().determinant() - Complex(1, 0)) < 1e-11);

  // S fixes the basis vectors
  for (Index c = 0; c < 2; ++c) {
    ComplexVector v = c2_basis().col(c);
    CHECK((h.tomita()(v) - v).norm() < 1e-12);
  }
  // modular flow keeps H
  RealSubspace moved = h.real().map_linear(h.modular_flow(1.0));
  CHECK(subspace_distance(moved, h.real()) < 1e-9);
}

TEST_CASE("separating failure is reported") {
  ComplexMatrix b(2, 2);
  b << Complex(1, 0), Complex(0, 1), Complex(0, 0), Complex(0, 0);
  try {
    StandardSubspace::from_vectors(b);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("separating") != std::string::npos);
  }
}

TEST_CASE("wrong basis count is reported") {
  ComplexMatrix b(3, 2);
  b.setZero();
  b(0, 0) = 1;
  b(1, 1) = 1;
  CHECK_THROWS_AS(StandardSubspace::from_vectors(b), Error);
}

TEST_CASE("subspace from involution inverts the Tomita map") {
  StandardSubspace h0 =
      StandardSubspace::from_involution(AntilinearOperator::conjugation(3));
  CHECK(subspace_equal(h0.real(), RealSubspace(3, ComplexMatrix::Identity(3, 3))));

  ComplexMatrix sm(2, 2);
  sm << 1.0, Complex(0, 2), 0.0, 1.0;
  StandardSubspace h = StandardSubspace::from_involution(AntilinearOperator(sm));
  CHECK(subspace_equal(h.real(), RealSubspace(2, c2_basis()), 1e-9));
}

TEST_CASE("non-involutions are rejected") {
  ComplexMatrix notinv(2, 2);
  notinv << 1, 1, 0, 1;
  CHECK_THROWS_AS(StandardSubspace::from_involution(AntilinearOperator(notinv)), Error);
}

TEST_CASE("bijection round trip on random standard subspaces") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    Index n = 2 + Index(rng() % 7);
    StandardSubspace h = random_standard_subspace(n, rng);
    StandardSubspace back = StandardSubspace::from_involution(h.tomita());
    CHECK(subspace_distance(back.real(), h.real()) <= 1e-9 * n);

    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    CHECK((h.tomita().squared() - id).norm() <= 1e-9);
    CHECK((h.conjugation().squared() - id).norm() <= 1e-9);
    ComplexMatrix jdj = compose(compose(h.conjugation(), h.modular()), h.conjugation());
    ComplexMatrix dinv = h.modular().partialPivLu().solve(id);
    CHECK((jdj - dinv).norm() <= 1e-8 * std::max(1.0, dinv.norm()));
    CHECK(std::abs(std::abs(h.modular().determinant()) - 1.0) <= 1e-9);

    StandardSubspace hp = h.complement();
    CHECK((hp.tomita().coeff() - h.tomita().adjoint().coeff()).norm() <= 1e-9);
  }
}

TEST_CASE("symplectic complement identities") {
  // (R^n)' = R^n
  RealSubspace rn(2, ComplexMatrix::Identity(2, 2));
  CHECK(subspace_equal(symplectic_complement(rn), rn, 1e-10));

  // zero subspace -> everything
  RealSubspace zero = RealSubspace::zero(2);
  CHECK(symplectic_complement(zero).real_dim() == 4);

  // H' = J H for standard H
  StandardSubspace h = StandardSubspace::from_vectors(c2_basis());
  RealSubspace hp = symplectic_complement(h.real());
  RealSubspace jh = h.real().map_antilinear(h.conjugation());
  CHECK(subspace_distance(hp, jh) < 1e-9);
  CHECK(subspace_distance(hp, h.complement().real()) < 1e-9);

  // H'' = H on random real subspaces of any dimension
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    Index n = 2 + Index(rng() % 4);
    Index k = 1 + Index(rng() % (2 * n - 1));
    ComplexMatrix b(n, k);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < k; ++j) b(i, j) = Complex(gauss(rng), gauss(rng));
    RealSubspace sub(n, b);
    CHECK(subspace_distance(symplectic_complement(symplectic_complement(sub)), sub) < 1e-9);
    CHECK(symplectic_complement(sub).real_dim() == 2 * n - sub.real_dim());
  }
}

TEST_CASE("transport carries modular data along unitaries") {
  StandardSubspace h = StandardSubspace::from_vectors(c2_basis());
  StandardSubspace same = transport(ComplexMatrix::Identity(2, 2), h);
  CHECK(subspace_distance(same.real(), h.real()) < 1e-10);

  ComplexMatrix u = ComplexMatrix::Zero(2, 2);
  u(0, 0) = Complex(0, 1);
  u(1, 1) = 1;
  StandardSubspace k = transport(u, h);
  HermitianEigen eig = hermitian_eig(k.modular());
  CHECK(eig.values[0] == doctest::Approx(3 - 2 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK(eig.values[1] == doctest::Approx(3 + 2 * std::sqrt(2.0)).epsilon(1e-10));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    Index n = 2 + Index(rng() % 7);
    StandardSubspace hh = random_standard_subspace(n, rng);
    ComplexMatrix uu = random_unitary(n, rng);
    StandardSubspace kk = transport(uu, hh);
    CHECK((uu * hh.modular() * uu.adjoint() - kk.modular()).norm() <=
          1e-9 * std::max(1.0, hh.modular().norm()));
    CHECK((conjugate_by_unitary(uu, hh.conjugation()).coeff() - kk.conjugation().coeff()).norm() <=
          1e-8);
  }
  CHECK_THROWS_AS(transport(2.0 * ComplexMatrix::Identity(2, 2), h), Error);
}

TEST_CASE("takesaki test on the trivial cases") {
  StandardSubspace h = StandardSubspace::from_vectors(ComplexMatrix::Identity(2, 2));
  TakesakiReport full = takesaki_test(h.real(), h, {0.0, 0.5, 1.0});
  CHECK(full.flow_invariant);
  CHECK(full.cyclic_in_ambient);
  CHECK(full.equals_h);
  CHECK(full.lemma_consistent);

  ComplexMatrix kb(2, 1);
  kb << 1.0, 0.0;
  RealSubspace k(2, kb);
  TakesakiReport part = takesaki_test(k, h, {0.3, 1.1});
  CHECK(part.flow_invariant);  // Delta = 1
  CHECK(!part.cyclic_in_ambient);
  CHECK(part.complex_span_dim == 1);
  CHECK(part.separating_in_span);
  CHECK(!part.equals_h);
  CHECK(part.lemma_consistent);  // implication vacuous

  ComplexMatrix outside(2, 1);
  outside << Complex(0, 1), 0.0;  // i e_1 is not in R^2
  CHECK_THROWS_AS(takesaki_test(RealSubspace(2, outside), h, {0.5}), Error);
}

TEST_CASE("no invariant cyclic proper subspaces show up in random search") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss(0, 1);
  int violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    Index n = 2 + Index(rng() % 3);
    StandardSubspace h = random_standard_subspace(n, rng);
    Index k = 1 + Index(rng() % n);
    RealVector coeff(n);
    ComplexMatrix kb(n, k);
    for (Index c = 0; c < k; ++c) {
      for (Index i = 0; i < n; ++i) coeff[i] = gauss(rng);
      kb.col(c) = h.real().basis() * coeff.cast<Complex>();
    }
    RealSubspace sub(n, kb, 1e-9);
    TakesakiReport rep = takesaki_test(sub, h, {0.45, 1.3});
    if (rep.flow_invariant && rep.cyclic_in_ambient && !rep.equals_h) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("nested fixed sets follow the subspace order") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Index n = 3 + Index(rng() % 4);
    StandardSubspace h = random_standard_subspace(n, rng);
    // real span of a strict subset of H sits inside ker(1 - S_H)
    Index k = 1 + Index(rng() % (n - 1));
    ComplexMatrix kb = h.real().basis().leftCols(k);
    RealSubspace sub(n, kb);
    CHECK(h.real().contains(sub, 1e-9));
    for (Index c = 0; c < k; ++c) {
      ComplexVector v = kb.col(c);
      CHECK((h.tomita()(v) - v).norm() <= 1e-9 * std::max(1.0, v.norm()));
    }
  }
}
