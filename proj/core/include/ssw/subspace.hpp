#pragma once

// Real and standard subspaces of C^n with their modular calculus: Tomita
// involutions, polar data (J, Delta), symplectic complements, modular flow,
// unitary transport and the Takesaki-type equality test.
//
// Finite-dimensional semantics: "cyclic" = H + iH spans C^n, "separating" =
// H intersect iH = {0}; standard means both, equivalently dim_R H = n with a
// complex-invertible basis matrix.

#include <optional>
#include <vector>

#include "ssw/linalg.hpp"

namespace ssw {

RealMatrix realify_columns(const ComplexMatrix& b);   // (Re; Im), 2n x k
ComplexMatrix unrealify_columns(const RealMatrix& r);  // inverse, n x k

// A closed real-linear subspace of C^n, held by a complex basis matrix whose
// columns are only required to be real-linearly independent.
class RealSubspace {
 public:
  RealSubspace(Index ambient_dim, ComplexMatrix basis, double tol = kDefaultTol);

  static RealSubspace zero(Index ambient_dim);
  static RealSubspace full(Index ambient_dim);

  Index ambient_dim() const { return ambient_dim_; }
  Index real_dim() const { return ortho_.cols(); }
  const ComplexMatrix& basis() const { return basis_; }
  const RealMatrix& real_orthobasis() const { return ortho_; }
  RealMatrix projection() const;  // real-orthogonal projector on R^{2n}

  bool contains(const ComplexVector& v, double tol = kDefaultTol) const;
  bool contains(const RealSubspace& other, double tol = kDefaultTol) const;

  // dim_C of span_C(K) = K + iK
  Index complex_span_dim(double tol = kDefaultTol) const;
  bool is_cyclic(double tol = kDefaultTol) const;      // K + iK = C^n
  bool is_separating(double tol = kDefaultTol) const;  // K intersect iK = {0}

  // image under a complex-linear map
  RealSubspace map_linear(const ComplexMatrix& m, double tol = kDefaultTol) const;
  RealSubspace map_antilinear(const AntilinearOperator& t, double tol = kDefaultTol) const;

 private:
  Index ambient_dim_;
  ComplexMatrix basis_;
  RealMatrix ortho_;
};

double subspace_distance(const RealSubspace& a, const RealSubspace& b);
bool subspace_equal(const RealSubspace& a, const RealSubspace& b, double tol = kDefaultTol);
RealSubspace intersect(const RealSubspace& a, const RealSubspace& b, double tol = kDefaultTol);
RealSubspace sum(const RealSubspace& a, const RealSubspace& b, double tol = kDefaultTol);

// H' = { xi : Im<xi, eta> = 0 for all eta in H } = (iH) orthogonal over R.
RealSubspace symplectic_complement(const RealSubspace& h);

class StandardSubspace {
 public:
  // Basis columns span H over R; S is derived as B conj(B)^{-1}.
  static StandardSubspace from_vectors(const ComplexMatrix& basis, double tol = kDefaultTol);
  // Inverse of H -> S_H: H = ker(1 - S), requires S to be a Tomita involution.
  static StandardSubspace from_involution(const AntilinearOperator& s, double tol = kDefaultTol);
  // From a (J, Delta) pair with J Delta J = Delta^{-1}.
  static StandardSubspace from_modular_pair(const AntilinearOperator& j,
                                            const ComplexMatrix& delta,
                                            double tol = kDefaultTol);

  Index ambient_dim() const { return real_.ambient_dim(); }
  const RealSubspace& real() const { return real_; }
  const AntilinearOperator& tomita() const { return tomita_; }
  const AntilinearOperator& conjugation() const { return conjugation_; }
  const ComplexMatrix& modular() const { return modular_; }

  ComplexMatrix modular_flow(double t) const;  // Delta^{it}

  // The standard subspace H' with Tomita operator S* (same ambient space).
  StandardSubspace complement(double tol = kDefaultTol) const;

 private:
  StandardSubspace(RealSubspace real, AntilinearOperator s, AntilinearOperator j,
                   ComplexMatrix delta)
      : real_(std::move(real)),
        tomita_(std::move(s)),
        conjugation_(std::move(j)),
        modular_(std::move(delta)) {}

  RealSubspace real_;
  AntilinearOperator tomita_;
  AntilinearOperator conjugation_;
  ComplexMatrix modular_;
};

// K = U H for unitary U; the transported modular data U Delta U*, U J U* is
// recomputed from K and checked against the transport identities.
StandardSubspace transport(const ComplexMatrix& u, const StandardSubspace& h,
                           double tol = kDefaultTol);

struct TakesakiReport {
  bool flow_invariant = false;       // Delta_H^{it} K = K at all sampled t
  double max_flow_residual = 0.0;
  bool cyclic_in_ambient = false;    // K + iK = C^n
  Index complex_span_dim = 0;        // dim_C span(K + iK)
  bool separating_in_span = false;   // K intersect iK = {0}
  bool equals_h = false;
  bool lemma_consistent = false;     // invariant && cyclic => equals_h
};

// Requires K contained in H.
TakesakiReport takesaki_test(const RealSubspace& k, const StandardSubspace& h,
                             const std::vector<double>& t_samples, double tol = kDefaultTol);

// Random standard subspace: conjugate a model (J0, Delta0) pair with
// J0 Delta0 J0 = Delta0^{-1} by a Haar unitary, then take ker(1 - J Delta^{1/2}).
StandardSubspace random_standard_subspace(Index n, std::mt19937_64& rng,
                                          double log_spread = 1.0);

}  // namespace ssw
