#include "ssw/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace ssw {

namespace {

const double kPi = 3.14159265358979323846;

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

Matrix4d metric_tensor() {
  Matrix4d g = Matrix4d::Identity();
  g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
  return g;
}

int check_axis(int axis) {
  require(axis >= 1 && axis <= 3, "axis must be 1, 2 or 3");
  return axis;
}

}  // namespace

double minkowski(const FourVector& x, const FourVector& y) {
  return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

double minkowski_square(const FourVector& x) { return minkowski(x, x); }

Matrix2c pauli(int i) {
  Matrix2c s = Matrix2c::Zero();
  switch (check_axis(i)) {
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
  }
  return s;
}

Matrix2c pauli_embed(const FourVector& p) {
  Matrix2c m;
  m << Complex(p[0] + p[3], 0), Complex(p[1], -p[2]), Complex(p[1], p[2]), Complex(p[0] - p[3], 0);
  return m;
}

FourVector pauli_extract(const Matrix2c& m) {
  FourVector p;
  p[0] = 0.5 * (m(0, 0) + m(1, 1)).real();
  p[1] = 0.5 * (m(0, 1) + m(1, 0)).real();
  p[2] = 0.5 * (m(1, 0) - m(0, 1)).imag();
  p[3] = 0.5 * (m(0, 0) - m(1, 1)).real();
  return p;
}

SL2Element::SL2Element(Matrix2c mm) : m(std::move(mm)) {
  require(std::abs(m.determinant() - Complex(1, 0)) <= 1e-6,
          "SL(2,C) element must have unit determinant");
}

SL2Element SL2Element::inverse() const {
  Matrix2c inv;
  inv << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);  // adjugate; det = 1
  return SL2Element(inv);
}

bool SL2Element::is_su2(double tol) const {
  return (m.adjoint() * m - Matrix2c::Identity()).norm() <= tol && det_defect() <= tol;
}

double SL2Element::det_defect() const { return std::abs(m.determinant() - Complex(1, 0)); }

SL2Element sl2_boost(int axis, double t) {
  // exp(s_axis t/2) = cosh(t/2) 1 + sinh(t/2) s_axis
  Matrix2c m = std::cosh(t / 2) * Matrix2c::Identity() + std::sinh(t / 2) * pauli(axis);
  return SL2Element(m);
}

SL2Element sl2_rotation(int axis, double theta) {
  // exp(i s_axis theta/2) = cos(theta/2) 1 + i sin(theta/2) s_axis
  Matrix2c m = std::cos(theta / 2) * Matrix2c::Identity() +
               Complex(0, 1) * std::sin(theta / 2) * pauli(axis);
  return SL2Element(m);
}

SL2Element sl2_two_pi_rotation() { return SL2Element(-Matrix2c::Identity()); }

LorentzMatrix LorentzMatrix::inverse() const {
  Matrix4d g = metric_tensor();
  return LorentzMatrix(g * m.transpose() * g);
}

double LorentzMatrix::metric_defect() const {
  Matrix4d g = metric_tensor();
  return (m.transpose() * g * m - g).norm();
}

bool LorentzMatrix::is_proper_orthochronous(double tol) const {
  return metric_defect() <= tol * 10 && m(0, 0) >= 1.0 - tol && std::abs(m.determinant() - 1.0) <= tol * 10;
}

LorentzMatrix covering_map(const SL2Element& a, double tol) {
  require(a.det_defect() <= tol * 1e3, "covering map needs det A = 1");
  Matrix4d l;
  for (int nu = 0; nu < 4; ++nu) {
    FourVector e;
    e[nu] = 1.0;
    Matrix2c image = a.m * pauli_embed(e) * a.m.adjoint();
    FourVector col = pauli_extract(image);
    for (int mu = 0; mu < 4; ++mu) l(mu, nu) = col[mu];
  }
  return LorentzMatrix(l);
}

namespace {

// SU(2) lift of a 3x3 rotation matrix via quaternion extraction. Our covering
// sends w 1 - i (x s1 + y s2 + z s3) to the usual CCW rotation of quaternion
// (w, x, y, z).
SL2Element su2_from_rotation3(const Eigen::Matrix3d& r) {
  double w, x, y, z;
  const double tr = r.trace();
  if (tr > 0) {
    double s = 2.0 * std::sqrt(tr + 1.0);
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) >= r(2, 2)) {
    double s = 2.0 * std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2));
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    double s = 2.0 * std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1));
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  Matrix2c m = w * Matrix2c::Identity() -
               Complex(0, 1) * (x * pauli(1) + y * pauli(2) + z * pauli(3));
  m /= std::sqrt(std::abs(m.determinant()));
  return SL2Element(m);
}

}  // namespace

SL2Element sl2_lift(const LorentzMatrix& l, double tol) {
  require(l.is_proper_orthochronous(std::max(tol, 1e-7)),
          "lift defined on the proper orthochronous component");
  // Split l = B R with B the pure boost carrying e0 to p = l e0.
  FourVector p = l.apply(FourVector(1, 0, 0, 0));
  Matrix2c ab = (pauli_embed(p) + Matrix2c::Identity()) / std::sqrt(2.0 * (p[0] + 1.0));
  SL2Element boost_part{ab};
  LorentzMatrix rot = covering_map(boost_part).inverse() * l;
  Eigen::Matrix3d r3 = rot.m.bottomRightCorner<3, 3>();
  SL2Element rot_part = su2_from_rotation3(r3);
  SL2Element lift = boost_part * rot_part;
  require((covering_map(lift).m - l.m).norm() <= std::max(1e-8, tol * 1e2),
          "lift verification failed: input not in the image of the covering map");
  return lift;
}

LorentzMatrix lorentz_boost(int axis, double t) {
  check_axis(axis);
  Matrix4d m = Matrix4d::Identity();
  m(0, 0) = std::cosh(t);
  m(0, axis) = std::sinh(t);
  m(axis, 0) = std::sinh(t);
  m(axis, axis) = std::cosh(t);
  return LorentzMatrix(m);
}

LorentzMatrix lorentz_rotation(int axis, double theta) {
  check_axis(axis);
  // Matches covering_map(sl2_rotation(axis, theta)): the plane (x_a, x_b) with
  // (a, b) the cyclic successors of axis turns clockwise by theta.
  int a = axis % 3 + 1;
  int b = a % 3 + 1;
  Matrix4d m = Matrix4d::Identity();
  m(a, a) = std::cos(theta);
  m(a, b) = std::sin(theta);
  m(b, a) = -std::sin(theta);
  m(b, b) = std::cos(theta);
  return LorentzMatrix(m);
}

Wedge Wedge::axis(int alpha) {
  Wedge w;
  w.base_axis_ = check_axis(alpha);
  w.rebuild_normal_form();
  return w;
}

void Wedge::rebuild_normal_form() {
  // Base functionals of W_alpha: x_alpha - x0 > 0 and x_alpha + x0 > 0.
  std::array<std::pair<Vector4d, double>, 2> raw;
  Vector4d wa = Vector4d::Zero(), wb = Vector4d::Zero();
  wa[0] = -1.0;
  wa[base_axis_] = 1.0;
  wb[0] = 1.0;
  wb[base_axis_] = 1.0;
  raw[0] = {wa, 0.0};
  raw[1] = {wb, 0.0};

  Matrix4d ginv_t = g_.inverse().m.transpose();
  for (auto& [w, c] : raw) {
    Vector4d wt = ginv_t * w;                    // functional after x -> g x
    double ct = c - wt.dot(a_.eigen());          // then x -> x + a
    if (complemented_) {
      wt = -wt;
      ct = -ct;
    }
    double norm = wt.norm();
    w = wt / norm;
    c = ct / norm;
  }
  auto key = [](const std::pair<Vector4d, double>& h) {
    return std::array<double, 5>{h.first[0], h.first[1], h.first[2], h.first[3], h.second};
  };
  if (key(raw[1]) < key(raw[0])) std::swap(raw[0], raw[1]);
  half_ = raw;
}

bool Wedge::contains(const FourVector& x) const {
  return half_[0].first.dot(x.eigen()) + half_[0].second > 0 &&
         half_[1].first.dot(x.eigen()) + half_[1].second > 0;
}

Wedge transform(const LorentzMatrix& g, const Wedge& w) {
  require(g.is_proper_orthochronous(1e-7), "wedges are moved by proper orthochronous maps");
  Wedge out = w;
  out.g_ = g * w.g_;
  out.a_ = FourVector(Vector4d(g.m * w.a_.eigen()));
  out.rebuild_normal_form();
  return out;
}

Wedge transform(const PoincareMap& g, const Wedge& w) {
  Wedge out = transform(g.lorentz, w);
  out.a_ = out.a_ + g.translation;
  out.rebuild_normal_form();
  return out;
}

Wedge causal_complement(const Wedge& w) {
  Wedge out = w;
  out.complemented_ = !w.complemented_;
  out.rebuild_normal_form();
  return out;
}

bool wedge_equal(const Wedge& a, const Wedge& b, double tol) {
  for (int i = 0; i < 2; ++i) {
    if ((a.halfspaces()[i].first - b.halfspaces()[i].first).norm() > tol) return false;
    if (std::abs(a.halfspaces()[i].second - b.halfspaces()[i].second) > tol) return false;
  }
  return true;
}

bool wedge_included(const Wedge& a, const Wedge& b, double tol) {
  // Each halfspace of b must contain a: its functional must be a nonnegative
  // combination of a's two functionals, with a compatible offset.
  Eigen::Matrix<double, 4, 2> basis;
  basis.col(0) = a.halfspaces()[0].first;
  basis.col(1) = a.halfspaces()[1].first;
  for (const auto& [u, d] : b.halfspaces()) {
    Eigen::Vector2d coeff = basis.colPivHouseholderQr().solve(u);
    if ((basis * coeff - u).norm() > tol) return false;
    if (coeff[0] < -tol || coeff[1] < -tol) return false;
    double offset = coeff[0] * a.halfspaces()[0].second + coeff[1] * a.halfspaces()[1].second;
    if (d < offset - tol) return false;
  }
  return true;
}

PoincareMap fixing_boost(const Wedge& w, double t) {
  LorentzMatrix inner = lorentz_boost(w.base_axis(), t);
  LorentzMatrix lor = w.lorentz() * inner * w.lorentz().inverse();
  // conjugate by the shift: x -> L (x - a) + a
  Vector4d a = w.shift().eigen();
  FourVector trans = FourVector(Vector4d(a - lor.m * a));
  return PoincareMap{lor, trans};
}

std::pair<SL2Element, SL2Element> reflection_elements(const Wedge& w, double tol) {
  require(w.shift().eigen().norm() <= tol,
          "reflection elements are provided for unshifted (Lorentz-image) wedges");
  int refl_axis = w.base_axis() % 3 + 1;  // W1 -> r2(pi), W2 -> r3(pi), W3 -> r1(pi)
  SL2Element base = sl2_rotation(refl_axis, kPi);
  SL2Element u = sl2_lift(w.lorentz(), tol);
  SL2Element r = u * base * u.inverse();
  return {r, -r};
}

SL2Element WedgeStabilizer::boost(double t) const {
  return conjugator * sl2_boost(base_axis, t) * conjugator.inverse();
}

SL2Element WedgeStabilizer::rotation(double theta) const {
  return conjugator * sl2_rotation(base_axis, theta) * conjugator.inverse();
}

std::array<FourVector, 4> WedgeStabilizer::translation_directions() const {
  return {FourVector(1, 0, 0, 0), FourVector(0, 1, 0, 0), FourVector(0, 0, 1, 0),
          FourVector(0, 0, 0, 1)};
}

WedgeStabilizer wedge_stabilizer(const Wedge& w, double tol) {
  require(w.shift().eigen().norm() <= tol,
          "stabilizer generators are provided for unshifted wedges");
  return WedgeStabilizer{sl2_lift(w.lorentz(), tol), w.base_axis()};
}

SL2Element random_sl2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix2c g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Complex det = g.determinant();
  if (std::abs(det) < 1e-12) return random_sl2(rng);
  g /= std::sqrt(det);
  return SL2Element(g);
}

SL2Element random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q[i] = gauss(rng);
  q.normalize();
  Matrix2c m = q[0] * Matrix2c::Identity() -
               Complex(0, 1) * (q[1] * pauli(1) + q[2] * pauli(2) + q[3] * pauli(3));
  return SL2Element(m);
}

}  // namespace ssw
