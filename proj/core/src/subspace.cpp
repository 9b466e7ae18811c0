#include "ssw/subspace.hpp"

#include <cmath>

namespace ssw {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace

RealMatrix realify_columns(const ComplexMatrix& b) {
  RealMatrix r(2 * b.rows(), b.cols());
  r.topRows(b.rows()) = b.real();
  r.bottomRows(b.rows()) = b.imag();
  return r;
}

ComplexMatrix unrealify_columns(const RealMatrix& r) {
  require(r.rows() % 2 == 0, "realified matrix must have even row count");
  const Index n = r.rows() / 2;
  ComplexMatrix b(n, r.cols());
  b.real() = r.topRows(n);
  b.imag() = r.bottomRows(n);
  return b;
}

RealSubspace::RealSubspace(Index ambient_dim, ComplexMatrix basis, double tol)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  require(basis_.cols() == 0 || basis_.rows() == ambient_dim_,
          "basis vectors have wrong ambient dimension");
  if (basis_.cols() == 0) {
    ortho_ = RealMatrix(2 * ambient_dim_, 0);
    return;
  }
  ortho_ = real_column_space(realify_columns(basis_), tol);
  require(ortho_.cols() == basis_.cols(),
          "basis vectors are not real-linearly independent");
}

RealSubspace RealSubspace::zero(Index ambient_dim) {
  return RealSubspace(ambient_dim, ComplexMatrix(ambient_dim, 0));
}

RealSubspace RealSubspace::full(Index ambient_dim) {
  ComplexMatrix b(ambient_dim, 2 * ambient_dim);
  b.leftCols(ambient_dim) = ComplexMatrix::Identity(ambient_dim, ambient_dim);
  b.rightCols(ambient_dim) =
      Complex(0, 1) * ComplexMatrix::Identity(ambient_dim, ambient_dim);
  return RealSubspace(ambient_dim, b);
}

RealMatrix RealSubspace::projection() const { return ortho_ * ortho_.transpose(); }

bool RealSubspace::contains(const ComplexVector& v, double tol) const {
  RealVector rv = realify_columns(v);
  RealVector res = rv - ortho_ * (ortho_.transpose() * rv);
  return res.norm() <= tol * std::max(1.0, rv.norm());
}

bool RealSubspace::contains(const RealSubspace& other, double tol) const {
  if (other.real_dim() == 0) return true;
  RealMatrix res = other.ortho_ - ortho_ * (ortho_.transpose() * other.ortho_);
  return res.norm() <= tol * std::max(1.0, double(other.real_dim()));
}

Index RealSubspace::complex_span_dim(double tol) const {
  if (basis_.cols() == 0) return 0;
  return column_space(basis_, tol).cols();
}

bool RealSubspace::is_cyclic(double tol) const { return complex_span_dim(tol) == ambient_dim_; }

bool RealSubspace::is_separating(double tol) const {
  // K intersect iK = {0}  iff  dim_R K equals dim_C span_C(K)
  return real_dim() == complex_span_dim(tol);
}

RealSubspace RealSubspace::map_linear(const ComplexMatrix& m, double tol) const {
  return RealSubspace(m.rows(), m * basis_, tol);
}

RealSubspace RealSubspace::map_antilinear(const AntilinearOperator& t, double tol) const {
  return RealSubspace(t.dim(), t.coeff() * basis_.conjugate(), tol);
}

double subspace_distance(const RealSubspace& a, const RealSubspace& b) {
  return (a.projection() - b.projection()).norm();
}

bool subspace_equal(const RealSubspace& a, const RealSubspace& b, double tol) {
  return subspace_distance(a, b) <= tol * std::max<double>(1.0, a.ambient_dim());
}

RealSubspace intersect(const RealSubspace& a, const RealSubspace& b, double tol) {
  require(a.ambient_dim() == b.ambient_dim(), "ambient dimensions differ");
  const Index n2 = 2 * a.ambient_dim();
  RealMatrix stacked(2 * n2, n2);
  stacked.topRows(n2) = RealMatrix::Identity(n2, n2) - a.projection();
  stacked.bottomRows(n2) = RealMatrix::Identity(n2, n2) - b.projection();
  RealNullspaceResult ns = real_nullspace(stacked, tol);
  return RealSubspace(a.ambient_dim(), unrealify_columns(ns.basis), tol);
}

RealSubspace sum(const RealSubspace& a, const RealSubspace& b, double tol) {
  require(a.ambient_dim() == b.ambient_dim(), "ambient dimensions differ");
  RealMatrix joined(2 * a.ambient_dim(), a.real_dim() + b.real_dim());
  joined.leftCols(a.real_dim()) = a.real_orthobasis();
  joined.rightCols(b.real_dim()) = b.real_orthobasis();
  RealMatrix span = real_column_space(joined, tol);
  return RealSubspace(a.ambient_dim(), unrealify_columns(span), tol);
}

RealSubspace symplectic_complement(const RealSubspace& h) {
  const Index n = h.ambient_dim();
  if (h.real_dim() == 0) return RealSubspace::full(n);
  // (iH) orthogonal complement w.r.t. Re<.,.>: kernel of (realified iH)^T.
  ComplexMatrix ibasis = Complex(0, 1) * h.basis();
  RealMatrix rows = realify_columns(ibasis).transpose();
  RealNullspaceResult ns = real_nullspace(rows, kDefaultTol);
  return RealSubspace(n, unrealify_columns(ns.basis));
}

StandardSubspace StandardSubspace::from_vectors(const ComplexMatrix& basis, double tol) {
  const Index n = basis.rows();
  require(basis.cols() == n, "a standard subspace of C^n needs exactly n basis vectors");
  RealSubspace real(n, basis, tol);  // throws if not real-linearly independent

  Eigen::JacobiSVD<ComplexMatrix> svd(basis);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  require(smin > tol * std::max(1.0, smax),
          "H intersect iH != {0}: subspace is not separating (conj(B) singular)");

  ComplexMatrix s_coeff =
      basis * basis.conjugate().partialPivLu().solve(ComplexMatrix::Identity(n, n));
  AntilinearOperator s(s_coeff);
  PolarAntilinear polar = polar_antilinear(s, std::max(tol, 1e-12));
  return StandardSubspace(std::move(real), std::move(s), std::move(polar.conjugation),
                          std::move(polar.modular));
}

StandardSubspace StandardSubspace::from_involution(const AntilinearOperator& s, double tol) {
  require(s.is_involution(tol), "S o S = 1 required");
  const Index n = s.dim();
  RealMatrix fixed_system = s.realified() - RealMatrix::Identity(2 * n, 2 * n);
  RealNullspaceResult ns = real_nullspace(fixed_system, std::max(tol, 1e-10));
  require(ns.basis.cols() == n,
          "ker(1 - S) has real dimension " + std::to_string(ns.basis.cols()) +
              ", expected " + std::to_string(n) +
              ": S is not the Tomita operator of a standard subspace");
  ComplexMatrix basis = unrealify_columns(ns.basis);
  RealSubspace real(n, basis, tol);
  PolarAntilinear polar = polar_antilinear(s, std::max(tol, 1e-12));
  return StandardSubspace(std::move(real), AntilinearOperator(s.coeff()),
                          std::move(polar.conjugation), std::move(polar.modular));
}

StandardSubspace StandardSubspace::from_modular_pair(const AntilinearOperator& j,
                                                     const ComplexMatrix& delta, double tol) {
  require(j.is_antiunitary(tol) && j.is_involution(tol),
          "J must be an antiunitary involution");
  require(is_hermitian(delta, tol), "Delta must be Hermitian");
  HermitianEigen eig = hermitian_eig(delta, tol);
  // definiteness floor independent of the accuracy tolerance: a wide but
  // genuinely positive modular spectrum stays admissible
  require(eig.values.minCoeff() > 1e-14 * std::max(1.0, eig.values.maxCoeff()),
          "Delta must be positive definite");
  ComplexMatrix jdj = compose(compose(j, delta), j);
  ComplexMatrix delta_inv =
      delta.partialPivLu().solve(ComplexMatrix::Identity(delta.rows(), delta.cols()));
  require(relative_deviation(jdj, delta_inv) <= std::max(tol, 1e-7),
          "J Delta J = Delta^{-1} violated");
  AntilinearOperator s = compose(j, hermitian_sqrt(delta, tol));
  return from_involution(s, std::max(tol, 1e-8));
}

ComplexMatrix StandardSubspace::modular_flow(double t) const {
  return hermitian_power_it(modular_, t, 1e-12);
}

StandardSubspace StandardSubspace::complement(double tol) const {
  return from_involution(tomita_.adjoint(), tol);
}

StandardSubspace transport(const ComplexMatrix& u, const StandardSubspace& h, double tol) {
  require(is_unitary(u, tol), "transport requires a unitary");
  StandardSubspace k = StandardSubspace::from_vectors(u * h.real().basis(), tol);
  // Lemma identities U Delta U* = Delta_K, U J U* = J_K; recomputed data must agree.
  ComplexMatrix delta_t = u * h.modular() * u.adjoint();
  require(relative_deviation(delta_t, k.modular()) <= std::max(1e-7, tol * 1e2),
          "transported modular operator mismatch");
  AntilinearOperator j_t = conjugate_by_unitary(u, h.conjugation());
  require(relative_deviation(j_t.coeff(), k.conjugation().coeff()) <= std::max(1e-7, tol * 1e2),
          "transported modular conjugation mismatch");
  return k;
}

TakesakiReport takesaki_test(const RealSubspace& k, const StandardSubspace& h,
                             const std::vector<double>& t_samples, double tol) {
  require(h.real().contains(k, std::max(tol, 1e-8)), "K is not contained in H");
  TakesakiReport rep;
  rep.flow_invariant = true;
  for (double t : t_samples) {
    ComplexMatrix flow = h.modular_flow(t);
    RealSubspace moved = k.map_linear(flow, tol);
    double d = subspace_distance(moved, k);
    rep.max_flow_residual = std::max(rep.max_flow_residual, d);
    if (d > tol * std::max<double>(1.0, k.ambient_dim())) rep.flow_invariant = false;
  }
  rep.complex_span_dim = k.complex_span_dim(tol);
  rep.cyclic_in_ambient = k.is_cyclic(tol);
  rep.separating_in_span = k.is_separating(tol);
  rep.equals_h = subspace_equal(k, h.real(), std::max(tol, 1e-8));
  rep.lemma_consistent = !(rep.flow_invariant && rep.cyclic_in_ambient) || rep.equals_h;
  return rep;
}

StandardSubspace random_standard_subspace(Index n, std::mt19937_64& rng, double log_spread) {
  require(n >= 1, "ambient dimension must be positive");
  ComplexMatrix j0 = ComplexMatrix::Zero(n, n);
  RealVector d0 = RealVector::Ones(n);
  std::uniform_real_distribution<double> uni(-log_spread, log_spread);
  Index pairs = n / 2;
  for (Index p = 0; p < pairs; ++p) {
    j0(2 * p, 2 * p + 1) = 1;
    j0(2 * p + 1, 2 * p) = 1;
    double lg = uni(rng);
    d0[2 * p] = std::exp(lg);
    d0[2 * p + 1] = std::exp(-lg);
  }
  if (n % 2 == 1) j0(n - 1, n - 1) = 1;

  ComplexMatrix u = random_unitary(n, rng);
  AntilinearOperator j(u * j0 * u.transpose());
  ComplexMatrix delta = u * d0.asDiagonal().toDenseMatrix().cast<Complex>() * u.adjoint();
  return StandardSubspace::from_modular_pair(j, delta, 1e-9);
}

}  // namespace ssw
