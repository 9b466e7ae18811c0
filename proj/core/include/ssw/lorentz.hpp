#pragma once

// Minkowski geometry, SL(2,C) and its 2:1 covering of the proper orthochronous
// Lorentz group, wedge regions with a decidable normal form, wedge-fixing
// boosts, reflections and stabilizer generators.
//
// Conventions (fixed throughout): metric (x,y) = x0 y0 - x1 y1 - x2 y2 - x3 y3;
// Pauli matrices s1 = [[0,1],[1,0]], s2 = [[0,-i],[i,0]], s3 = [[1,0],[0,-1]];
// lifts lambda_j(t) = exp(s_j t/2), r_j(theta) = exp(i s_j theta/2); momentum
// action A ptilde A^dag with ptilde = p0 1 + sum p_i s_i.

#include <array>
#include <utility>
#include <vector>

#include "ssw/linalg.hpp"

namespace ssw {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4d = Eigen::Matrix4d;
using Vector4d = Eigen::Vector4d;

struct FourVector {
  std::array<double, 4> c{0, 0, 0, 0};

  FourVector() = default;
  FourVector(double x0, double x1, double x2, double x3) : c{x0, x1, x2, x3} {}
  explicit FourVector(const Vector4d& v) : c{v[0], v[1], v[2], v[3]} {}

  double& operator[](int i) { return c[size_t(i)]; }
  double operator[](int i) const { return c[size_t(i)]; }
  Vector4d eigen() const { return Vector4d(c[0], c[1], c[2], c[3]); }

  FourVector operator+(const FourVector& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
  }
  FourVector operator-(const FourVector& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
  }
  FourVector operator*(double s) const { return {s * c[0], s * c[1], s * c[2], s * c[3]}; }
};

// Minkowski pairing x0 y0 - x.y
double minkowski(const FourVector& x, const FourVector& y);
double minkowski_square(const FourVector& x);

Matrix2c pauli(int i);  // i in 1..3
Matrix2c pauli_embed(const FourVector& p);   // p0 1 + sum p_i s_i
FourVector pauli_extract(const Matrix2c& m);  // inverse of the embedding

struct SL2Element {
  Matrix2c m;

  SL2Element() : m(Matrix2c::Identity()) {}
  explicit SL2Element(Matrix2c mm);

  SL2Element operator*(const SL2Element& o) const { return SL2Element(m * o.m); }
  SL2Element inverse() const;
  SL2Element operator-() const { return SL2Element(-m); }

  bool is_su2(double tol = kDefaultTol) const;
  double det_defect() const;
};

SL2Element sl2_boost(int axis, double t);        // lambda_axis(t)
SL2Element sl2_rotation(int axis, double theta);  // r_axis(theta)
SL2Element sl2_two_pi_rotation();                 // r(2 pi) = -1

struct LorentzMatrix {
  Matrix4d m;

  LorentzMatrix() : m(Matrix4d::Identity()) {}
  explicit LorentzMatrix(Matrix4d mm) : m(std::move(mm)) {}

  LorentzMatrix operator*(const LorentzMatrix& o) const { return LorentzMatrix(m * o.m); }
  LorentzMatrix inverse() const;  // g Lambda^T g, exact for metric-preserving m

  FourVector apply(const FourVector& x) const { return FourVector(Vector4d(m * x.eigen())); }

  double metric_defect() const;  // ||Lambda^T g Lambda - g||
  bool is_proper_orthochronous(double tol = kDefaultTol) const;
};

// Covering homomorphism Lambda(A), via A ptilde A^dag.
LorentzMatrix covering_map(const SL2Element& a, double tol = kDefaultTol);

// One of the two lifts (+A, -A) with covering_map(A) = l, via the
// boost-rotation split. Throws when l is not proper orthochronous.
SL2Element sl2_lift(const LorentzMatrix& l, double tol = kDefaultTol);

// Closed-form one-parameter subgroups, independent of the covering map
// (used as the second route in tests).
LorentzMatrix lorentz_boost(int axis, double t);
LorentzMatrix lorentz_rotation(int axis, double theta);

struct PoincareMap {
  LorentzMatrix lorentz;
  FourVector translation;  // x -> Lorentz x + translation

  FourVector apply(const FourVector& x) const {
    return FourVector(Vector4d(lorentz.m * x.eigen())) + translation;
  }
};

// Wedge a + g W_alpha, W_alpha = {|x0| < x_alpha}. The normal form keeps the
// two affine halfspace functionals { w.x + c > 0 } so that equality,
// complement and inclusion are decidable without sampling.
class Wedge {
 public:
  static Wedge axis(int alpha);

  int base_axis() const { return base_axis_; }
  const LorentzMatrix& lorentz() const { return g_; }
  const FourVector& shift() const { return a_; }

  bool contains(const FourVector& x) const;
  // halfspace data, normalized: two (w, c) pairs in canonical order
  const std::array<std::pair<Vector4d, double>, 2>& halfspaces() const { return half_; }

  friend Wedge transform(const LorentzMatrix& g, const Wedge& w);
  friend Wedge transform(const PoincareMap& g, const Wedge& w);
  friend Wedge causal_complement(const Wedge& w);

 private:
  Wedge() = default;
  void rebuild_normal_form();

  int base_axis_ = 1;
  LorentzMatrix g_;
  FourVector a_;
  bool complemented_ = false;  // tracks W vs W' relative to a + g W_alpha
  std::array<std::pair<Vector4d, double>, 2> half_;
};

Wedge transform(const LorentzMatrix& g, const Wedge& w);
Wedge transform(const PoincareMap& g, const Wedge& w);
Wedge causal_complement(const Wedge& w);

bool wedge_equal(const Wedge& a, const Wedge& b, double tol = kDefaultTol);
// strict region inclusion a subset of b (as sets, up to tol on the functionals)
bool wedge_included(const Wedge& a, const Wedge& b, double tol = kDefaultTol);

// The unique wedge-preserving one-parameter boost group at parameter t,
// as a Poincare map (pure Lorentz when the wedge is unshifted).
PoincareMap fixing_boost(const Wedge& w, double t);

// Both lifts +-r of an SL(2,C) element with Lambda(r) W = W'. Defined for
// unshifted wedges; the pi-rotation axis is the cyclic successor of the base
// axis (W3 -> r1(pi), matching the reflection used on orbit momenta).
std::pair<SL2Element, SL2Element> reflection_elements(const Wedge& w, double tol = kDefaultTol);

struct WedgeStabilizer {
  SL2Element conjugator;  // u with Lambda(u) W_base = W
  int base_axis;

  SL2Element boost(double t) const;
  SL2Element rotation(double theta) const;
  SL2Element two_pi() const { return sl2_two_pi_rotation(); }
  // G_W is generated by G_W^0 together with all spacetime translations.
  std::array<FourVector, 4> translation_directions() const;
};

WedgeStabilizer wedge_stabilizer(const Wedge& w, double tol = kDefaultTol);

SL2Element random_sl2(std::mt19937_64& rng);
SL2Element random_su2(std::mt19937_64& rng);

}  // namespace ssw
