#pragma once

// Mass-shell geometry and finite orbit models: orbit coordinates, the
// reflection decomposition R_1(pi) = Lambda_3(t_p) R_3(theta_p), sample models
// closed under the W_3-stabilizer lattice, MASA verification and the numerical
// modularity-condition (bicommutant) check.
//
// Finite surrogate: the boost acts as a cyclic shift on a symmetric rapidity
// lattice t_j = (j - (N-1)/2) * step; genuine point maps (rotations, the
// R_1(pi) reflection) are exact permutations, the boost wrap is the one
// abstract edge, and continuous-parameter identities are asserted only at
// lattice multiples / wrap-commensurate translation parameters.

#include <optional>
#include <string>
#include <vector>

#include "ssw/lorentz.hpp"

namespace ssw {

struct MassShellPoint {
  double mass = 0.0;
  FourVector p;  // p0 = +sqrt(m^2 + |spatial|^2)

  static MassShellPoint from_spatial(double mass, double p1, double p2, double p3);
};

struct OrbitCoordinates {
  double radius_label = 0.0;  // p1^2 + p2^2 (squared-radius orbit label)
  double theta = 0.0;
  double rapidity = 0.0;
};

// Throws on the excluded massless orbits {(p0,0,0,+-p0)}.
OrbitCoordinates orbit_coordinates(const MassShellPoint& p, double tol = kDefaultTol);
MassShellPoint orbit_point(double mass, double radius_label, double theta, double rapidity);

struct ReflectionDecomposition {
  double t_p = 0.0;
  double theta_p = 0.0;
};

// Lambda_3(t_p) R_3(theta_p) p = R_1(pi) p = (p0, p1, -p2, -p3).
// theta_p = 0 when p1 = p2 = 0 (tie-break).
ReflectionDecomposition reflect_decompose(const MassShellPoint& p, double tol = kDefaultTol);

struct OrbitSpec {
  double radius_label = 1.0;  // p1^2 + p2^2
  int angle_count = 4;
  int rapidity_count = 7;
};

enum class ElementKind { BoostStep, RotationStep, Reflection, TwoPi, Translation };

struct ElementSpec {
  ElementKind kind;
  FourVector translation;  // for Translation only

  static ElementSpec boost_step() { return {ElementKind::BoostStep, {}}; }
  static ElementSpec rotation_step() { return {ElementKind::RotationStep, {}}; }
  static ElementSpec reflection() { return {ElementKind::Reflection, {}}; }
  static ElementSpec two_pi() { return {ElementKind::TwoPi, {}}; }
  static ElementSpec translate(const FourVector& a) { return {ElementKind::Translation, a}; }
};

struct OrbitModelSpec {
  std::vector<double> masses;
  std::vector<int> multiplicities;  // parallel to masses; empty = all 1
  std::vector<OrbitSpec> orbits;    // applied to every mass
  double rapidity_step = 3.0;  // tame cond(exp(-2 pi K)) for net-level residuals
  std::vector<ElementSpec> elements;
  Index sample_budget = 4096;
};

class OrbitModel {
 public:
  struct Block {
    int mass_index = 0;
    int copy = 0;
    int orbit_index = 0;
    Index offset = 0;
    int angle_count = 0;
    int rapidity_count = 0;
    double mass = 0.0;
    double radius_label = 0.0;
    double kappa = 0.0;  // sqrt(m^2 + r)
  };

  struct Sample {
    Index block = 0;
    int angle = 0;
    int rapidity = 0;
    FourVector p;
  };

  struct RegisteredElement {
    std::string label;
    ElementSpec spec;
    ComplexMatrix unitary;
  };

  static OrbitModel build(const OrbitModelSpec& spec);

  Index dim() const { return Index(samples_.size()); }
  double rapidity_step() const { return step_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Sample>& samples() const { return samples_; }
  const std::vector<RegisteredElement>& elements() const { return elements_; }
  const OrbitModelSpec& spec() const { return spec_; }

  // unitaries of the lattice stabilizer elements (independent of registration)
  ComplexMatrix boost_step_unitary() const;
  ComplexMatrix rotation_step_unitary() const;
  ComplexMatrix reflection_unitary() const;  // U(r_1(pi))
  ComplexMatrix translation_unitary(const FourVector& a) const;

  // spectral data of the lattice boost: U(lambda_3(k step)) = exp(i k step K)
  ComplexMatrix boost_generator() const;          // K, Hermitian
  ComplexMatrix modular_operator() const;         // exp(-2 pi K)
  ComplexMatrix modular_power(double t) const;    // Delta^{it} = exp(-2 pi i t K)

  // antiunitary J from the momentum map p -> (p0, -p1, -p2, p3) composed with
  // conjugation; needs every angle_count even.
  AntilinearOperator modular_conjugation() const;

  // smallest positive lightlike translation parameter whose one-step boost
  // conjugation identity is exact including the lattice wrap; sign = +-1
  // selects v_+ = (1,0,0,1) / v_- = (-1,0,0,1).
  double commensurate_lightlike(Index block_index, int sign) const;

  std::vector<ComplexMatrix> registered_unitaries() const;
  std::vector<ComplexMatrix> registered_translations() const;

 private:
  OrbitModelSpec spec_;
  double step_ = 0.0;
  std::vector<Block> blocks_;
  std::vector<Sample> samples_;
  std::vector<RegisteredElement> elements_;
};

struct MasaReport {
  bool verdict = false;
  bool scalar = true;              // single multiplicity per sample
  bool separating = false;         // registered translation phases separate samples
  Index commutant_dim = 0;         // sum of squared phase-class sizes
  std::vector<std::pair<Index, Index>> collisions;  // sample pairs not separated
};

// Commutant of the diagonal translation algebra: maximal abelian iff the
// registered translation phases separate the samples.
MasaReport masa_check(const OrbitModel& model, double tol = kDefaultTol);

struct CommutantResult {
  std::vector<ComplexMatrix> basis;  // Frobenius-orthonormal commutant basis
  RealVector constraint_spectrum;    // singular values of the commutator system
  double gap = 0.0;                  // singular-value split quality
  bool conclusive = true;
  double max_residual = 0.0;         // max ||[G, X]|| over generators and basis
};

enum class CommutantStrategy { Auto, Dense, Reduced };

// Basis of {X : [G,X] = [G*,X] = 0 for all generators}. Dense assembles the
// stacked Kronecker commutator system; Reduced first confines X to the block
// pattern of a random self-adjoint algebra element. Verdicts are gap-audited.
CommutantResult commutant_basis(const std::vector<ComplexMatrix>& generators, double tol = kDefaultTol,
                                CommutantStrategy strategy = CommutantStrategy::Auto);

enum class McVerdict { True, False, Inconclusive };

struct McReport {
  McVerdict verdict = McVerdict::Inconclusive;
  Index commutant_dim = 0;
  double max_residual = 0.0;         // max ||[r, X]|| over the commutant basis
  double gap = 0.0;
  RealVector constraint_spectrum;    // singular values behind the gap verdict
  std::optional<ComplexMatrix> certificate;  // violating commutant element
};

// Modularity condition: r in the bicommutant of the generators, decided as
// [r, X] = 0 for every commutant basis element X.
McReport mc_check(const std::vector<ComplexMatrix>& generators, const ComplexMatrix& r,
                  double tol = kDefaultTol, CommutantStrategy strategy = CommutantStrategy::Auto);

struct BlockMcReport {
  McReport total;
  std::vector<McReport> per_block;
  bool blocks_disjoint = false;
  std::vector<std::pair<Index, Index>> equivalent_pairs;  // intertwined block pairs
};

// MC on a finite direct sum: generators g_i = diag(g_i^{(1)}, ..., g_i^{(B)});
// every block must supply the same generator list length.
BlockMcReport direct_sum_mc(const std::vector<std::vector<ComplexMatrix>>& block_generators,
                            const std::vector<ComplexMatrix>& r_blocks,
                            double tol = kDefaultTol);

// Convenience overload over orbit models with identical registered element
// layouts (pairwise distinct masses expected; equivalences are reported).
BlockMcReport direct_sum_mc_models(const std::vector<const OrbitModel*>& models,
                            const std::vector<ComplexMatrix>& r_blocks,
                            double tol = kDefaultTol);

struct BorchersReport {
  double boost_lightlike_residual = 0.0;   // one-step conjugation of U_+- at commensurate t
  double modular_lightlike_residual = 0.0;  // same via Delta^{is}
  double transverse_residual = 0.0;         // transverse translations vs boost and Delta
  double rotation_residual = 0.0;           // rotation conjugation of translations
  bool lightlike_signs_definite = false;    // generators of U_+ / U_- positive / negative
  double max_residual() const;
};

// Lattice Borchers relations: Delta^{is} U_+-(t) Delta^{-is} = U_+-(e^{-+ 2 pi s} t)
// at one lattice step and wrap-commensurate t, plus transverse commutation and
// rotation covariance of translations.
BorchersReport borchers_check(const OrbitModel& model);

}  // namespace ssw
