#pragma once

// Dense complex linear algebra layer: Hermitian spectral calculus, antilinear
// operators stored by their coefficient matrix (v -> A * conj(v)), polar
// decomposition of antilinear involutions, and gap-audited nullspaces.

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ssw {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kDefaultTol = 1e-9;

// Thrown on precondition violations (non-Hermitian input where Hermitian is
// required, singular data, malformed files, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

double matrix_scale(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

// ||a - b||_F relative to max(||a||, ||b||, 1).
double relative_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

// An antilinear operator T on C^n, stored through T(v) = coeff * conj(v).
// Composition and adjoint reduce to plain matrix algebra:
//   (T2 T1)(v) = A2 * conj(A1) * v        (a linear operator)
//   T* has coefficient matrix A^T          (same action rule)
class AntilinearOperator {
 public:
  explicit AntilinearOperator(ComplexMatrix coeff);

  static AntilinearOperator conjugation(Index n);

  Index dim() const { return coeff_.rows(); }
  const ComplexMatrix& coeff() const { return coeff_; }

  ComplexVector operator()(const ComplexVector& v) const;

  // Adjoint w.r.t. <u,v> = u^dag v, defined by <T* u, v> = <T v, u>.
  AntilinearOperator adjoint() const { return AntilinearOperator(coeff_.transpose()); }

  AntilinearOperator inverse() const;

  // T o T: the linear operator coeff * conj(coeff).
  ComplexMatrix squared() const;

  bool is_involution(double tol = kDefaultTol) const;
  bool is_antiunitary(double tol = kDefaultTol) const;

  // Realification on R^{2n} with v = (Re v; Im v):  [[Ar, Ai], [Ai, -Ar]].
  RealMatrix realified() const;

 private:
  ComplexMatrix coeff_;
};

// T2 o T1 (linear), T o M, M o T, and the unitary conjugate U T U*.
ComplexMatrix compose(const AntilinearOperator& t2, const AntilinearOperator& t1);
AntilinearOperator compose(const AntilinearOperator& t, const ComplexMatrix& m);
AntilinearOperator compose(const ComplexMatrix& m, const AntilinearOperator& t);
AntilinearOperator conjugate_by_unitary(const ComplexMatrix& u, const AntilinearOperator& t);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns
};

HermitianEigen hermitian_eig(const ComplexMatrix& x, double tol = kDefaultTol);

enum class SpectralFn { Sqrt, InverseSqrt, Exp, Log, PowerIt, Restrict };

// Spectral calculus f(X) = V f(lambda) V* for Hermitian X. PowerIt takes the
// flow parameter t; Restrict takes the closed interval [lo, hi]. Positivity is
// demanded where the scalar map needs it.
ComplexMatrix hermitian_function(const ComplexMatrix& x, SpectralFn fn, double a = 0.0,
                                 double b = 0.0, double tol = kDefaultTol);

ComplexMatrix hermitian_sqrt(const ComplexMatrix& x, double tol = kDefaultTol);
ComplexMatrix hermitian_inverse_sqrt(const ComplexMatrix& x, double tol = kDefaultTol);
ComplexMatrix hermitian_exp(const ComplexMatrix& x, double tol = kDefaultTol);
ComplexMatrix hermitian_log(const ComplexMatrix& x, double tol = kDefaultTol);
ComplexMatrix hermitian_power_it(const ComplexMatrix& x, double t, double tol = kDefaultTol);
ComplexMatrix spectral_restrict(const ComplexMatrix& x, double lo, double hi,
                                double tol = kDefaultTol);

struct PolarAntilinear {
  AntilinearOperator conjugation;  // J, antiunitary involution
  ComplexMatrix modular;           // Delta, positive definite
};

// S = J Delta^{1/2} for an antilinear involution S; Delta = S* S and
// J Delta J = Delta^{-1} hold for the returned pair.
PolarAntilinear polar_antilinear(const AntilinearOperator& s, double tol = kDefaultTol);

struct NullspaceResult {
  ComplexMatrix basis;          // orthonormal columns spanning the kernel
  RealVector singular_values;   // descending, full list
  double gap;                   // smallest kept sv / largest dropped sv
  bool gap_ok;                  // true when the split at tol is unambiguous
};

struct RealNullspaceResult {
  RealMatrix basis;
  RealVector singular_values;
  double gap;
  bool gap_ok;
};

// Right nullspace {v : ||M v|| <= tol * ||M||}, orthonormal. gap_ok reports
// whether the singular-value split at the threshold is clean (>= 1e3 ratio).
NullspaceResult nullspace(const ComplexMatrix& m, double tol = kDefaultTol);
RealNullspaceResult real_nullspace(const RealMatrix& m, double tol = kDefaultTol);

// Orthonormal basis of the column span (complex / real), rank decided at tol.
ComplexMatrix column_space(const ComplexMatrix& m, double tol = kDefaultTol);
RealMatrix real_column_space(const RealMatrix& m, double tol = kDefaultTol);

// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(Index n, std::mt19937_64& rng);
ComplexMatrix random_hermitian(Index n, std::mt19937_64& rng);

}  // namespace ssw
