#include "ssw/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ssw {

namespace {

constexpr double kGapRequirement = 1e3;

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace

double matrix_scale(const ComplexMatrix& m) {
  return std::max(1.0, m.norm());
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol * matrix_scale(m);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).norm() <= tol * std::max(1.0, double(m.rows()));
}

double relative_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

AntilinearOperator::AntilinearOperator(ComplexMatrix coeff) : coeff_(std::move(coeff)) {
  require(coeff_.rows() == coeff_.cols() && coeff_.rows() > 0,
          "antilinear operator requires a square nonempty matrix");
}

AntilinearOperator AntilinearOperator::conjugation(Index n) {
  return AntilinearOperator(ComplexMatrix::Identity(n, n));
}

ComplexVector AntilinearOperator::operator()(const ComplexVector& v) const {
  require(v.size() == dim(), "antilinear operator applied to wrong dimension");
  return coeff_ * v.conjugate();
}

AntilinearOperator AntilinearOperator::inverse() const {
  // (T^{-1})(v) = conj(A^{-1}) conj(v): T T^{-1} = A conj(conj(A^{-1})) = 1.
  ComplexMatrix inv = coeff_.partialPivLu().solve(ComplexMatrix::Identity(dim(), dim()));
  return AntilinearOperator(inv.conjugate());
}

ComplexMatrix AntilinearOperator::squared() const {
  return coeff_ * coeff_.conjugate();
}

bool AntilinearOperator::is_involution(double tol) const {
  ComplexMatrix id = ComplexMatrix::Identity(dim(), dim());
  return (squared() - id).norm() <= tol * matrix_scale(squared());
}

bool AntilinearOperator::is_antiunitary(double tol) const {
  return is_unitary(coeff_, tol);
}

RealMatrix AntilinearOperator::realified() const {
  const Index n = dim();
  RealMatrix r(2 * n, 2 * n);
  RealMatrix ar = coeff_.real();
  RealMatrix ai = coeff_.imag();
  r.topLeftCorner(n, n) = ar;
  r.topRightCorner(n, n) = ai;
  r.bottomLeftCorner(n, n) = ai;
  r.bottomRightCorner(n, n) = -ar;
  return r;
}

ComplexMatrix compose(const AntilinearOperator& t2, const AntilinearOperator& t1) {
  return t2.coeff() * t1.coeff().conjugate();
}

AntilinearOperator compose(const AntilinearOperator& t, const ComplexMatrix& m) {
  return AntilinearOperator(t.coeff() * m.conjugate());
}

AntilinearOperator compose(const ComplexMatrix& m, const AntilinearOperator& t) {
  return AntilinearOperator(m * t.coeff());
}

AntilinearOperator conjugate_by_unitary(const ComplexMatrix& u, const AntilinearOperator& t) {
  // (U T U*)(v) = U A conj(U^dag v) = U A U^T conj(v).
  return AntilinearOperator(u * t.coeff() * u.transpose());
}

HermitianEigen hermitian_eig(const ComplexMatrix& x, double tol) {
  require(is_hermitian(x, tol), "matrix is not Hermitian within tolerance");
  ComplexMatrix sym = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  require(solver.info() == Eigen::Success, "Hermitian eigendecomposition failed");
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix hermitian_function(const ComplexMatrix& x, SpectralFn fn, double a, double b,
                                 double tol) {
  HermitianEigen eig = hermitian_eig(x, tol);
  const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  // positivity is a domain requirement, not an accuracy knob; a wide but
  // genuinely positive spectrum must stay admissible
  const double floor = 1e-14 * scale;
  RealVector lam = eig.values;
  ComplexVector flam(lam.size());
  for (Index k = 0; k < lam.size(); ++k) {
    double v = lam[k];
    switch (fn) {
      case SpectralFn::Sqrt:
        require(v >= -floor, "sqrt requires a positive semidefinite matrix");
        flam[k] = std::sqrt(std::max(0.0, v));
        break;
      case SpectralFn::InverseSqrt:
        require(v > floor, "inverse sqrt requires a positive definite matrix");
        flam[k] = 1.0 / std::sqrt(v);
        break;
      case SpectralFn::Exp:
        flam[k] = std::exp(v);
        break;
      case SpectralFn::Log:
        require(v > floor, "log requires a positive definite matrix");
        flam[k] = std::log(v);
        break;
      case SpectralFn::PowerIt:
        require(v > floor, "power-it requires a positive definite matrix");
        flam[k] = std::exp(Complex(0.0, a * std::log(v)));
        break;
      case SpectralFn::Restrict:
        flam[k] = (v >= a - tol * scale && v <= b + tol * scale) ? v : 0.0;
        break;
    }
  }
  return eig.vectors * flam.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& x, double tol) {
  return hermitian_function(x, SpectralFn::Sqrt, 0, 0, tol);
}
ComplexMatrix hermitian_inverse_sqrt(const ComplexMatrix& x, double tol) {
  return hermitian_function(x, SpectralFn::InverseSqrt, 0, 0, tol);
}
ComplexMatrix hermitian_exp(const ComplexMatrix& x, double tol) {
  return hermitian_function(x, SpectralFn::Exp, 0, 0, tol);
}
ComplexMatrix hermitian_log(const ComplexMatrix& x, double tol) {
  return hermitian_function(x, SpectralFn::Log, 0, 0, tol);
}
ComplexMatrix hermitian_power_it(const ComplexMatrix& x, double t, double tol) {
  return hermitian_function(x, SpectralFn::PowerIt, t, 0, tol);
}
ComplexMatrix spectral_restrict(const ComplexMatrix& x, double lo, double hi, double tol) {
  require(lo <= hi, "spectral restriction needs lo <= hi");
  return hermitian_function(x, SpectralFn::Restrict, lo, hi, tol);
}

PolarAntilinear polar_antilinear(const AntilinearOperator& s, double tol) {
  require(s.is_involution(tol), "polar decomposition requires S o S = 1");
  // Delta = S* S, positive by construction; J = S Delta^{-1/2}.
  ComplexMatrix delta = compose(s.adjoint(), s);
  require(is_hermitian(delta, tol), "S* S of an involution must be Hermitian");
  delta = 0.5 * (delta + delta.adjoint());
  HermitianEigen eig = hermitian_eig(delta, tol);
  // invertibility floor: Delta may be legitimately ill conditioned, the polar
  // factors just have to stay resolvable in double precision
  require(eig.values.minCoeff() > 1e-14 * std::max(1.0, eig.values.maxCoeff()),
          "modular operator singular beyond tolerance");
  ComplexMatrix inv_sqrt = hermitian_inverse_sqrt(delta, tol);
  AntilinearOperator j = compose(s, inv_sqrt);
  return PolarAntilinear{std::move(j), std::move(delta)};
}

namespace {

template <typename Matrix, typename Result>
Result nullspace_impl(const Matrix& m, double tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  RealVector sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  const double threshold = tol * std::max(smax, 1e-300);

  Index rank = 0;
  while (rank < sv.size() && sv[rank] > threshold) ++rank;
  const Index null_dim = m.cols() - rank;

  Result out;
  out.basis = svd.matrixV().rightCols(null_dim);
  out.singular_values = sv;
  if (rank == 0 || rank == sv.size()) {
    out.gap = std::numeric_limits<double>::infinity();
    out.gap_ok = true;
  } else {
    out.gap = sv[rank - 1] / std::max(sv[rank], 1e-300);
    out.gap_ok = out.gap >= kGapRequirement;
  }
  return out;
}

}  // namespace

NullspaceResult nullspace(const ComplexMatrix& m, double tol) {
  require(tol > 0, "nullspace tolerance must be positive");
  return nullspace_impl<ComplexMatrix, NullspaceResult>(m, tol);
}

RealNullspaceResult real_nullspace(const RealMatrix& m, double tol) {
  require(tol > 0, "nullspace tolerance must be positive");
  return nullspace_impl<RealMatrix, RealNullspaceResult>(m, tol);
}

ComplexMatrix column_space(const ComplexMatrix& m, double tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  RealVector sv = svd.singularValues();
  const double threshold = tol * std::max(sv.size() > 0 ? sv[0] : 0.0, 1e-300);
  Index rank = 0;
  while (rank < sv.size() && sv[rank] > threshold) ++rank;
  return svd.matrixU().leftCols(rank);
}

RealMatrix real_column_space(const RealMatrix& m, double tol) {
  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeThinU);
  RealVector sv = svd.singularValues();
  const double threshold = tol * std::max(sv.size() > 0 ? sv[0] : 0.0, 1e-300);
  Index rank = 0;
  while (rank < sv.size() && sv[rank] > threshold) ++rank;
  return svd.matrixU().leftCols(rank);
}

ComplexMatrix random_unitary(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : Complex(1, 0);
  }
  return q;
}

ComplexMatrix random_hermitian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (g + g.adjoint());
}

}  // namespace ssw
