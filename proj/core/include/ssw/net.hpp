#pragma once

// Covariant nets of standard subspaces over a registered finite wedge family:
// construction from a (J, boost generator) pair, per-axiom verification with
// residuals, Z-maps, the two-action tensor demonstrator and the geometric vs
// algebraic Tomita comparison.
//
// The registered wedge family is Lorentz-generated: the base wedge W_3, its
// causal complement, and images under registered SL(2,C) elements. Boost
// covariance and the Borchers half-sided inclusion are certified at lattice
// level (see verify_axioms), since a finite-dimensional one-parameter group
// cannot properly translate a subspace.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssw/momentum.hpp"
#include "ssw/subspace.hpp"

namespace ssw {

enum class NetElementKind { WedgeFixing, Reflection, TwoPi, Translation };

struct NetElement {
  std::string label;
  ComplexMatrix unitary;
  NetElementKind kind = NetElementKind::WedgeFixing;
  FourVector translation;  // Translation kind only
};

struct NetCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string note;
};

class NetModel {
 public:
  // H(W_3) = ker(1 - J Delta^{1/2}) with Delta = exp(-2 pi K); other wedges by
  // transport with the registered reflection. Preconditions: J K J = -K and
  // every wedge-fixing unitary commutes with the derived Tomita operator.
  static NetModel bgl(const AntilinearOperator& j, const ComplexMatrix& boost_generator,
                      std::vector<NetElement> action, bool fermionic, double tol = kDefaultTol,
                      std::optional<ComplexMatrix> twist = std::nullopt);

  // Canonical scalar net carried by an orbit model: J, K and the action table
  // all come from the model's lattice representation.
  static NetModel canonical(const OrbitModel& model, double tol = kDefaultTol);

  Index dim() const { return h3_.ambient_dim(); }
  bool fermionic() const { return fermionic_; }
  // the exact J handed to the construction (the subspace's own polar data
  // carries cond(Delta)-level noise on top of it)
  const AntilinearOperator& conjugation() const { return j_; }
  const StandardSubspace& wedge(bool complemented) const { return complemented ? h3p_ : h3_; }
  const ComplexMatrix& boost_generator() const { return boost_generator_; }
  const ComplexMatrix& twist_gamma() const { return gamma_; }
  const ComplexMatrix& twist_b() const { return b_; }
  const std::vector<NetElement>& action() const { return action_; }
  const OrbitModel* orbit_model() const { return model_ ? &*model_ : nullptr; }

  // Z_W(t) = Delta_{H(W)}^{it} U(lambda_W(2 pi t)); the complemented wedge uses
  // the reversed boost generator.
  ComplexMatrix z_map(bool complemented, double t) const;

  // U(lambda_3(t)) = exp(i t K), spectral.
  ComplexMatrix boost_unitary(double t) const;

 private:
  friend struct NetAccess;
  StandardSubspace h3_;
  StandardSubspace h3p_;
  AntilinearOperator j_;
  ComplexMatrix boost_generator_;
  ComplexMatrix gamma_;
  ComplexMatrix b_;
  bool fermionic_ = false;
  std::vector<NetElement> action_;
  std::optional<OrbitModel> model_;
  double tol_ = kDefaultTol;

  NetModel(StandardSubspace h3, StandardSubspace h3p, AntilinearOperator j,
           ComplexMatrix k, ComplexMatrix gamma, ComplexMatrix b, bool fermionic,
           std::vector<NetElement> action)
      : h3_(std::move(h3)),
        h3p_(std::move(h3p)),
        j_(std::move(j)),
        boost_generator_(std::move(k)),
        gamma_(std::move(gamma)),
        b_(std::move(b)),
        fermionic_(fermionic),
        action_(std::move(action)) {}
};

// Per-axiom report, stable order: isotony, covariance, positivity,
// reeh-schlieder, twisted-locality, bisognano-wichmann, duality,
// twist-modular-commute, twist-conjugation, borchers-halfsided.
std::vector<NetCheck> verify_axioms(const NetModel& net, double tol = kDefaultTol);

struct LocalRegionReport {
  RealSubspace space;
  Index real_dim = 0;
  bool cyclic = false;  // H(O) + i H(O) = ambient
};

// H(O) = intersection of the listed wedge subspaces; names are "W3" / "W3p".
LocalRegionReport local_subspace(const NetModel& net, const std::vector<std::string>& wedges,
                                 double tol = kDefaultTol);

struct TensorDemoReport {
  double delta_factorization_residual = 0.0;  // Delta_{K(x)H} vs 1 (x) Delta_H
  double invariance_residual = 0.0;           // U_V moves the net wedges correctly
  double ui_z_residual = 0.0;                 // Z for U_I, identically 1
  double uv_z_deviation = 0.0;                // ||Z_V(t_probe) - 1||, > 0 iff B-W fails
  bool uv_bw_fails = false;
  std::vector<double> uv_z_eigenphases;       // phases of Z_V(t_probe) eigenvalues
  double noncovariance_mismatch = 0.0;        // the section-5 conjugation contradiction
  double jgj_residual = 0.0;                  // ||J G J - G||, confirms the quotient identity
  double g_deviation = 0.0;                   // ||G - 1||, nonzero iff the two actions differ
  double compare_tomita_block_deviation = 0.0;  // K-block of C away from identity
  double compare_tomita_commutation = 0.0;      // [C, U_I(g)] residuals
};

// K (x) H demonstrator: K = C^2 with plain conjugation (Delta_K = 1), V on the
// boost lattice is the plane rotation by omega * t, V(reflection) = diag(1,-1).
// U_I = 1 (x) U satisfies B-W; U_V = V (x) U is covariant on the registered
// elements and fails B-W whenever omega != 0.
TensorDemoReport tensor_demonstrator(const NetModel& base, double omega, double t_probe = 1.0,
                                     double tol = kDefaultTol);

struct TomitaComparison {
  ComplexMatrix c;                 // S_geo S_alg^{-1}, a linear operator
  double commutation_residual = 0.0;  // max ||[C, U(g)]|| over registered unitaries
};

// S_geo = J_geo exp(-pi K_geo) against S_alg = J_{H(W)} Delta^{1/2}; K_geo
// defaults to the net's boost generator for the chosen wedge.
TomitaComparison compare_tomita(const NetModel& net, bool complemented,
                                const AntilinearOperator& j_geo,
                                std::optional<ComplexMatrix> k_geo = std::nullopt,
                                double tol = kDefaultTol);

struct PhaseVariantEntry {
  Complex lambda;
  bool valid_net = false;          // S_lambda is again a Tomita involution
  bool equals_base = false;        // ker(1 - S_lambda) = H
  double modular_deviation = 0.0;  // Delta_lambda vs Delta
};

// The couples (lambda J, Delta) for |lambda| = 1: each defines a covariant
// net; equality with the base subspace is computed, not asserted.
std::vector<PhaseVariantEntry> phase_variants(const NetModel& net,
                                              const std::vector<Complex>& lambdas,
                                              double tol = kDefaultTol);

}  // namespace ssw
