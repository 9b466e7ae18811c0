#include "ssw/spin.hpp"

#include <cmath>
#include <map>

namespace ssw {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace

SpinLabel::SpinLabel(int twice_s) : twice(twice_s) {
  require(twice_s >= 0, "spin label must be a nonnegative half-integer");
}

SpinLabel SpinLabel::of(double s) {
  double doubled = 2.0 * s;
  int rounded = int(std::lround(doubled));
  require(std::abs(doubled - rounded) < 1e-9 && rounded >= 0,
          "spin label must be a nonnegative half-integer");
  return SpinLabel(rounded);
}

SpinMatrices spin_matrices(const SpinLabel& s) {
  const Index d = s.dimension();
  const double sv = s.value();
  ComplexMatrix sz = ComplexMatrix::Zero(d, d);
  ComplexMatrix sp = ComplexMatrix::Zero(d, d);  // raising, weight basis s..-s
  for (Index k = 0; k < d; ++k) {
    double m = sv - double(k);
    sz(k, k) = m;
    if (k + 1 < d) {
      double mlow = m - 1.0;
      sp(k, k + 1) = std::sqrt(sv * (sv + 1) - mlow * (mlow + 1));
    }
  }
  ComplexMatrix sm = sp.adjoint();
  SpinMatrices out;
  out.sx = 0.5 * (sp + sm);
  out.sy = Complex(0, -0.5) * (sp - sm);
  out.sz = sz;
  return out;
}

ComplexMatrix wigner_d(const SpinLabel& s, const SL2Element& a, double tol) {
  require(a.is_su2(std::max(tol, 1e-7)), "Wigner D needs an SU(2) element");
  // quaternion form a = w 1 + i (x s1 + y s2 + z s3), |(w,x,y,z)| = 1
  const double w = 0.5 * (a.m(0, 0) + a.m(1, 1)).real();
  double x = 0.5 * (a.m * pauli(1)).trace().imag();
  double y = 0.5 * (a.m * pauli(2)).trace().imag();
  double z = 0.5 * (a.m * pauli(3)).trace().imag();
  // tr(s_j A) = 2 i x_j, so Im tr(A s_j)/2 recovers x_j -- note tr(A s_j) = tr(s_j A)
  double vnorm = std::sqrt(x * x + y * y + z * z);
  double theta = 2.0 * std::atan2(vnorm, w);
  double nx = 0, ny = 0, nz = 1;
  if (vnorm > 1e-14) {
    nx = x / vnorm;
    ny = y / vnorm;
    nz = z / vnorm;
  }
  SpinMatrices gen = spin_matrices(s);
  ComplexMatrix h = nx * gen.sx + ny * gen.sy + nz * gen.sz;
  // exp(i theta n.S), spectral since n.S is Hermitian
  HermitianEigen eig = hermitian_eig(h, 1e-9);
  ComplexVector phases(eig.values.size());
  for (Index k = 0; k < eig.values.size(); ++k)
    phases[k] = std::exp(Complex(0, theta * eig.values[k]));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

std::vector<SpinMultiplicity> clebsch_multiplicities(const SpinLabel& s1, const SpinLabel& s2) {
  std::vector<SpinMultiplicity> out;
  for (int tj = std::abs(s1.twice - s2.twice); tj <= s1.twice + s2.twice; tj += 2) {
    out.push_back({SpinLabel(tj), 1});
  }
  return out;
}

Index SpinDecomposition::total_dimension() const {
  Index total = 0;
  for (const auto& r : records) total += Index(r.multiplicity) * r.spin.dimension();
  return total;
}

SpinDecomposition decompose_counterexample(int n, const SpinLabel& s, int cutoff_n, double mass) {
  require(n >= 0, "little-group label n must be nonnegative");
  require(2 * cutoff_n >= n, "cutoff must satisfy N >= n/2");
  std::map<int, int> mult;  // twice_j -> multiplicity
  for (int ti = n; ti <= 2 * cutoff_n; ti += 2) {
    for (int tj = std::abs(s.twice - ti); tj <= s.twice + ti; tj += 2) {
      mult[tj] += 1;
    }
  }
  SpinDecomposition out;
  for (const auto& [tj, k] : mult) out.records.push_back({mass, SpinLabel(tj), k});
  return out;
}

SL2Element boost_matrix(const MassShellPoint& p) {
  require(p.mass > 0, "A_p = sqrt(ptilde/m) needs m > 0");
  Matrix2c m = pauli_embed(p.p) / p.mass;
  // principal square root of a positive 2x2 with det = 1
  Matrix2c a = (m + Matrix2c::Identity()) / std::sqrt(m.trace().real() + 2.0);
  return SL2Element(a);
}

SL2Element wigner_rotation(const MassShellPoint& p, const SL2Element& a, double tol) {
  SL2Element ap = boost_matrix(p);
  LorentzMatrix lam_inv = covering_map(a, tol).inverse();
  FourVector q = lam_inv.apply(p.p);
  MassShellPoint moved;
  moved.mass = p.mass;
  moved.p = q;
  SL2Element aq = boost_matrix(moved);
  return ap.inverse() * a * aq;
}

}  // namespace ssw
