#include "ssw/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numeric>

namespace ssw {

namespace {

const double kPi = 3.14159265358979323846;
const double kTwoPi = 2.0 * kPi;

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

double wrap_to_pm_pi(double x) {
  double y = std::fmod(x + kPi, kTwoPi);
  if (y < 0) y += kTwoPi;
  return y - kPi;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

MassShellPoint MassShellPoint::from_spatial(double mass, double p1, double p2, double p3) {
  require(mass >= 0.0, "mass must be nonnegative");
  MassShellPoint out;
  out.mass = mass;
  out.p = FourVector(std::sqrt(mass * mass + p1 * p1 + p2 * p2 + p3 * p3), p1, p2, p3);
  return out;
}

OrbitCoordinates orbit_coordinates(const MassShellPoint& point, double tol) {
  const FourVector& p = point.p;
  const double r = p[1] * p[1] + p[2] * p[2];
  const double scale = std::max(1.0, p[0]);
  if (point.mass <= tol * scale && r <= tol * tol * scale * scale) {
    throw Error("excluded null orbit {(p0,0,0,+-p0)}: no G_3 coordinates");
  }
  OrbitCoordinates out;
  out.radius_label = r;
  out.theta = std::atan2(p[2], p[1]);
  const double kappa = std::sqrt(point.mass * point.mass + r);
  out.rapidity = std::asinh(p[3] / kappa);
  return out;
}

MassShellPoint orbit_point(double mass, double radius_label, double theta, double rapidity) {
  require(mass >= 0.0, "mass must be nonnegative");
  require(radius_label >= 0.0, "orbit label p1^2 + p2^2 must be nonnegative");
  const double rho = std::sqrt(radius_label);
  const double kappa = std::sqrt(mass * mass + radius_label);
  MassShellPoint out;
  out.mass = mass;
  out.p = FourVector(kappa * std::cosh(rapidity), rho * std::cos(theta), rho * std::sin(theta),
                     kappa * std::sinh(rapidity));
  return out;
}

ReflectionDecomposition reflect_decompose(const MassShellPoint& point, double tol) {
  OrbitCoordinates oc = orbit_coordinates(point, tol);
  ReflectionDecomposition out;
  // R_3(theta) turns (p1, p2) clockwise by theta, so phi -> -phi needs 2 phi;
  // Lambda_3(s) shifts the (p0, p3) rapidity by s, so t -> -t needs -2t.
  out.theta_p = wrap_to_pm_pi(2.0 * std::atan2(point.p[2], point.p[1]));
  out.t_p = -2.0 * oc.rapidity;
  return out;
}

OrbitModel OrbitModel::build(const OrbitModelSpec& spec) {
  require(!spec.masses.empty(), "model needs at least one mass");
  require(!spec.orbits.empty(), "model needs at least one orbit");
  require(spec.rapidity_step > 0, "rapidity step must be positive");
  std::vector<int> mult = spec.multiplicities;
  if (mult.empty()) mult.assign(spec.masses.size(), 1);
  require(mult.size() == spec.masses.size(), "multiplicities must parallel masses");
  for (int m : mult) require(m >= 1, "multiplicities must be positive");

  OrbitModel model;
  model.spec_ = spec;
  model.spec_.multiplicities = mult;
  model.step_ = spec.rapidity_step;

  Index offset = 0;
  for (size_t mi = 0; mi < spec.masses.size(); ++mi) {
    const double mass = spec.masses[mi];
    require(mass >= 0, "masses must be nonnegative");
    for (int copy = 0; copy < mult[mi]; ++copy) {
      for (size_t oi = 0; oi < spec.orbits.size(); ++oi) {
        const OrbitSpec& orb = spec.orbits[oi];
        require(orb.angle_count >= 1 && orb.rapidity_count >= 1,
                "orbit lattice counts must be positive");
        require(mass > 0 || orb.radius_label > 0,
                "massless orbits need a positive radius label (excluded null orbit)");
        Block b;
        b.mass_index = int(mi);
        b.copy = copy;
        b.orbit_index = int(oi);
        b.offset = offset;
        b.angle_count = orb.angle_count;
        b.rapidity_count = orb.rapidity_count;
        b.mass = mass;
        b.radius_label = orb.radius_label;
        b.kappa = std::sqrt(mass * mass + orb.radius_label);
        offset += Index(orb.angle_count) * orb.rapidity_count;
        require(offset <= spec.sample_budget,
                "closure explosion: sample count exceeds the configured budget");
        model.blocks_.push_back(b);
      }
    }
  }

  model.samples_.resize(size_t(offset));
  for (size_t bi = 0; bi < model.blocks_.size(); ++bi) {
    const Block& b = model.blocks_[bi];
    for (int a = 0; a < b.angle_count; ++a) {
      for (int j = 0; j < b.rapidity_count; ++j) {
        const double theta = kTwoPi * a / b.angle_count;
        const double t = (j - (b.rapidity_count - 1) / 2.0) * model.step_;
        Sample s;
        s.block = Index(bi);
        s.angle = a;
        s.rapidity = j;
        s.p = orbit_point(b.mass, b.radius_label, theta, t).p;
        model.samples_[size_t(b.offset + Index(a) * b.rapidity_count + j)] = s;
      }
    }
  }

  for (const ElementSpec& el : spec.elements) {
    RegisteredElement reg;
    reg.spec = el;
    switch (el.kind) {
      case ElementKind::BoostStep:
        reg.label = "boost_step";
        reg.unitary = model.boost_step_unitary();
        break;
      case ElementKind::RotationStep:
        reg.label = "rotation_step";
        reg.unitary = model.rotation_step_unitary();
        break;
      case ElementKind::Reflection:
        reg.label = "reflection";
        reg.unitary = model.reflection_unitary();
        break;
      case ElementKind::TwoPi:
        reg.label = "two_pi";
        reg.unitary = ComplexMatrix::Identity(model.dim(), model.dim());
        break;
      case ElementKind::Translation: {
        reg.label = "translation";
        reg.unitary = model.translation_unitary(el.translation);
        break;
      }
    }
    model.elements_.push_back(std::move(reg));
  }
  return model;
}

namespace {

// permutation matrix sending sample `from` to sample `to(from)`
ComplexMatrix block_permutation(const OrbitModel& model,
                                const std::function<Index(const OrbitModel::Block&, int, int)>& to) {
  const Index d = model.dim();
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (const auto& b : model.blocks()) {
    for (int a = 0; a < b.angle_count; ++a) {
      for (int j = 0; j < b.rapidity_count; ++j) {
        Index from = b.offset + Index(a) * b.rapidity_count + j;
        u(to(b, a, j), from) = 1.0;
      }
    }
  }
  return u;
}

}  // namespace

ComplexMatrix OrbitModel::boost_step_unitary() const {
  return block_permutation(*this, [](const Block& b, int a, int j) {
    return b.offset + Index(a) * b.rapidity_count + (j + 1) % b.rapidity_count;
  });
}

ComplexMatrix OrbitModel::rotation_step_unitary() const {
  for (const auto& b : blocks_) {
    require(b.angle_count == blocks_.front().angle_count,
            "rotation step needs a uniform angle count across orbits");
  }
  // R_3(2 pi / A) moves the sample at angle index a to index a - 1.
  return block_permutation(*this, [](const Block& b, int a, int j) {
    return b.offset + Index((a + b.angle_count - 1) % b.angle_count) * b.rapidity_count + j;
  });
}

ComplexMatrix OrbitModel::reflection_unitary() const {
  // R_1(pi): theta -> -theta, t -> -t; exact point map on the symmetric lattice.
  return block_permutation(*this, [](const Block& b, int a, int j) {
    return b.offset + Index((b.angle_count - a) % b.angle_count) * b.rapidity_count +
           (b.rapidity_count - 1 - j);
  });
}

ComplexMatrix OrbitModel::translation_unitary(const FourVector& a) const {
  ComplexVector phases(dim());
  for (Index k = 0; k < dim(); ++k) {
    phases[k] = std::exp(Complex(0.0, minkowski(a, samples_[size_t(k)].p)));
  }
  return phases.asDiagonal();
}

namespace {

// spectral pairs of the cyclic one-step shift on Z_N, as a boost generator:
// shift = exp(i step K_N), K_N f_k = nu_k f_k with nu_k = -wrap(2 pi k / N)/step
struct ShiftSpectral {
  ComplexMatrix fourier;  // columns f_k
  RealVector nu;
};

ShiftSpectral shift_spectral(int n, double step) {
  ShiftSpectral out;
  out.fourier.resize(n, n);
  out.nu.resize(n);
  for (int k = 0; k < n; ++k) {
    double angle = kTwoPi * k / n;
    double wrapped = std::fmod(angle + kPi, kTwoPi) - kPi;  // (-pi, pi]
    out.nu[k] = -wrapped / step;
    for (int j = 0; j < n; ++j) {
      out.fourier(j, k) = std::exp(Complex(0.0, angle * j)) / std::sqrt(double(n));
    }
  }
  return out;
}

}  // namespace

ComplexMatrix OrbitModel::boost_generator() const {
  ComplexMatrix k = ComplexMatrix::Zero(dim(), dim());
  for (const auto& b : blocks_) {
    ShiftSpectral sp = shift_spectral(b.rapidity_count, step_);
    ComplexMatrix kn =
        sp.fourier * sp.nu.cast<Complex>().asDiagonal() * sp.fourier.adjoint();
    ComplexMatrix kb = kron(ComplexMatrix::Identity(b.angle_count, b.angle_count), kn);
    k.block(b.offset, b.offset, kb.rows(), kb.cols()) = kb;
  }
  return 0.5 * (k + k.adjoint());
}

ComplexMatrix OrbitModel::modular_operator() const {
  ComplexMatrix d = ComplexMatrix::Zero(dim(), dim());
  for (const auto& b : blocks_) {
    ShiftSpectral sp = shift_spectral(b.rapidity_count, step_);
    ComplexVector lam(b.rapidity_count);
    for (int k = 0; k < b.rapidity_count; ++k) lam[k] = std::exp(-kTwoPi * sp.nu[k]);
    ComplexMatrix dn = sp.fourier * lam.asDiagonal() * sp.fourier.adjoint();
    ComplexMatrix db = kron(ComplexMatrix::Identity(b.angle_count, b.angle_count), dn);
    d.block(b.offset, b.offset, db.rows(), db.cols()) = db;
  }
  return 0.5 * (d + d.adjoint());
}

ComplexMatrix OrbitModel::modular_power(double t) const {
  ComplexMatrix u = ComplexMatrix::Zero(dim(), dim());
  for (const auto& b : blocks_) {
    ShiftSpectral sp = shift_spectral(b.rapidity_count, step_);
    ComplexVector lam(b.rapidity_count);
    for (int k = 0; k < b.rapidity_count; ++k)
      lam[k] = std::exp(Complex(0.0, -kTwoPi * t * sp.nu[k]));
    ComplexMatrix un = sp.fourier * lam.asDiagonal() * sp.fourier.adjoint();
    ComplexMatrix ub = kron(ComplexMatrix::Identity(b.angle_count, b.angle_count), un);
    u.block(b.offset, b.offset, ub.rows(), ub.cols()) = ub;
  }
  return u;
}

AntilinearOperator OrbitModel::modular_conjugation() const {
  for (const auto& b : blocks_) {
    require(b.angle_count % 2 == 0,
            "modular conjugation needs even angle counts (theta -> theta + pi)");
  }
  // j_3 conjugation: p -> (p0, -p1, -p2, p3) composed with complex conjugation.
  ComplexMatrix perm = block_permutation(*this, [](const Block& b, int a, int j) {
    return b.offset + Index((a + b.angle_count / 2) % b.angle_count) * b.rapidity_count + j;
  });
  return AntilinearOperator(perm);
}

double OrbitModel::commensurate_lightlike(Index block_index, int sign) const {
  require(block_index >= 0 && size_t(block_index) < blocks_.size(), "block index out of range");
  require(sign == 1 || sign == -1, "sign selects v_+ or v_-");
  const Block& b = blocks_[size_t(block_index)];
  const double tmax = (b.rapidity_count - 1) / 2.0 * step_;
  double denom;
  if (sign == 1) {
    denom = b.kappa * (std::exp(step_ + tmax) - std::exp(-tmax));
  } else {
    denom = b.kappa * (std::exp(tmax) - std::exp(-tmax - step_));
  }
  if (b.rapidity_count == 1) return 1.0;  // single-point lattice: any t is exact
  return kTwoPi / denom;
}

std::vector<ComplexMatrix> OrbitModel::registered_unitaries() const {
  std::vector<ComplexMatrix> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.unitary);
  return out;
}

std::vector<ComplexMatrix> OrbitModel::registered_translations() const {
  std::vector<ComplexMatrix> out;
  for (const auto& e : elements_)
    if (e.spec.kind == ElementKind::Translation) out.push_back(e.unitary);
  return out;
}

MasaReport masa_check(const OrbitModel& model, double tol) {
  MasaReport rep;
  std::vector<RealVector> phase_rows;
  for (const auto& e : model.elements()) {
    if (e.spec.kind != ElementKind::Translation) continue;
    RealVector row(model.dim());
    for (Index k = 0; k < model.dim(); ++k)
      row[k] = minkowski(e.spec.translation, model.samples()[size_t(k)].p);
    phase_rows.push_back(row);
  }
  rep.scalar = true;
  for (size_t mi = 0; mi < model.spec().multiplicities.size(); ++mi)
    if (model.spec().multiplicities[mi] > 1) rep.scalar = false;

  // class sizes of the "same phase for every registered translation" relation
  const Index d = model.dim();
  std::vector<Index> cls(static_cast<size_t>(d));
  std::iota(cls.begin(), cls.end(), 0);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      bool same = true;
      for (const auto& row : phase_rows) {
        double diff = std::remainder(row[i] - row[j], kTwoPi);
        if (std::abs(diff) > tol * 1e3) {
          same = false;
          break;
        }
      }
      if (same) {
        cls[size_t(j)] = cls[size_t(i)];
        rep.collisions.emplace_back(i, j);
      }
    }
  }
  std::map<Index, Index> sizes;
  for (Index i = 0; i < d; ++i) sizes[cls[size_t(i)]]++;
  rep.commutant_dim = 0;
  for (auto& [root, count] : sizes) rep.commutant_dim += count * count;
  rep.separating = rep.collisions.empty() && !phase_rows.empty();
  rep.verdict = rep.separating && rep.scalar;
  if (d == 1) rep.verdict = true;  // commutant = scalars = diagonal
  return rep;
}

namespace {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

std::vector<ComplexMatrix> with_adjoints(const std::vector<ComplexMatrix>& gens) {
  std::vector<ComplexMatrix> out;
  out.reserve(2 * gens.size());
  for (const auto& g : gens) {
    out.push_back(g);
    out.push_back(g.adjoint());
  }
  return out;
}

CommutantResult commutant_dense(const std::vector<ComplexMatrix>& gens, double tol) {
  const Index d = gens.front().rows();
  const Index d2 = d * d;
  // C = I (x) G - G^T (x) I per generator; the Gram pieces C^dag C are
  // accumulated data-parallel over generators and summed in a fixed order
  std::vector<ComplexMatrix> all = with_adjoints(gens);
  std::vector<std::future<ComplexMatrix>> pieces;
  for (const auto& g : all) {
    pieces.push_back(std::async(std::launch::async, [&g, d]() {
      ComplexMatrix id = ComplexMatrix::Identity(d, d);
      ComplexMatrix piece = kron(id, ComplexMatrix(g.adjoint() * g));
      piece -= kron(g.transpose(), g.adjoint());
      piece -= kron(g.conjugate(), g);
      piece += kron(ComplexMatrix(g.conjugate() * g.transpose()), id);
      return piece;
    }));
  }
  ComplexMatrix gram = ComplexMatrix::Zero(d2, d2);
  for (auto& piece : pieces) gram += piece.get();
  gram = 0.5 * (gram + gram.adjoint());
  HermitianEigen eig = hermitian_eig(gram, 1e-6);

  const double lam_scale = std::max(eig.values.maxCoeff(), 1e-300);
  // kernel selection in the squared spectrum; the floor keeps eigensolver
  // noise (~eps * lambda_max) inside the kernel
  const double sigma_tol = std::max(tol, 1e-7);
  const double thresh = sigma_tol * sigma_tol * lam_scale;
  CommutantResult out;
  out.constraint_spectrum = eig.values.cwiseMax(0.0).cwiseSqrt();
  Index kept = 0;
  while (kept < d2 && eig.values[kept] <= thresh) ++kept;
  for (Index k = 0; k < kept; ++k) {
    ComplexMatrix x(d, d);
    for (Index c = 0; c < d; ++c) x.col(c) = eig.vectors.col(k).segment(c * d, d);
    out.basis.push_back(x);
  }
  if (kept == 0 || kept == d2) {
    out.gap = std::numeric_limits<double>::infinity();
  } else {
    out.gap = std::sqrt(std::max(eig.values[kept], 0.0) /
                        std::max(eig.values[kept - 1], 1e-300));
  }
  out.conclusive = out.gap >= 1e3;
  for (const auto& x : out.basis)
    for (const auto& g : gens)
      out.max_residual = std::max(out.max_residual, commutator(g, x).norm());
  return out;
}

CommutantResult commutant_reduced(const std::vector<ComplexMatrix>& gens, double tol) {
  const Index d = gens.front().rows();
  // random self-adjoint element of the *-algebra: its eigen blocks confine the
  // commutant support
  std::mt19937_64 rng(0x53535701u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (const auto& g : gens) {
    a += gauss(rng) * (g + g.adjoint());
    a += gauss(rng) * (Complex(0, 1) * (g - g.adjoint()));
  }
  a = 0.5 * (a + a.adjoint());
  HermitianEigen eig = hermitian_eig(a, 1e-6);

  const double spread = std::max(eig.values.maxCoeff() - eig.values.minCoeff(), 1e-12);
  const double cluster_tol = 1e-8 * spread;
  std::vector<std::pair<Index, Index>> clusters;  // [begin, end)
  Index begin = 0;
  for (Index k = 1; k <= d; ++k) {
    if (k == d || eig.values[k] - eig.values[k - 1] > cluster_tol) {
      clusters.emplace_back(begin, k);
      begin = k;
    }
  }

  std::vector<std::pair<Index, Index>> pattern;  // (p, q) entries in the eigenbasis
  for (const auto& [b1, e1] : clusters)
    for (Index p = b1; p < e1; ++p)
      for (Index q = b1; q < e1; ++q) pattern.emplace_back(p, q);
  const Index kdim = Index(pattern.size());

  std::vector<ComplexMatrix> rotated;
  for (const auto& g : with_adjoints(gens)) rotated.push_back(eig.vectors.adjoint() * g * eig.vectors);

  std::vector<std::future<ComplexMatrix>> pieces;
  for (const auto& g : rotated) {
    pieces.push_back(std::async(std::launch::async, [&g, &pattern, d, kdim]() {
      ComplexMatrix cblock(d * d, kdim);
      for (Index e = 0; e < kdim; ++e) {
        auto [p, q] = pattern[size_t(e)];
        ComplexMatrix com = ComplexMatrix::Zero(d, d);
        com.col(q) += g.col(p);  // G E_pq
        com.row(p) -= g.row(q);  // E_pq G
        cblock.col(e) = Eigen::Map<const ComplexVector>(com.data(), d * d);
      }
      return ComplexMatrix(cblock.adjoint() * cblock);
    }));
  }
  ComplexMatrix gram = ComplexMatrix::Zero(kdim, kdim);
  for (auto& piece : pieces) gram += piece.get();
  gram = 0.5 * (gram + gram.adjoint());
  HermitianEigen keig = hermitian_eig(gram, 1e-6);

  double lam_scale = std::max(keig.values.maxCoeff(), 1e-300);
  const double sigma_tol = std::max(tol, 1e-7);
  const double thresh = sigma_tol * sigma_tol * lam_scale;
  CommutantResult out;
  out.constraint_spectrum = keig.values.cwiseMax(0.0).cwiseSqrt();
  Index kept = 0;
  while (kept < kdim && keig.values[kept] <= thresh) ++kept;
  for (Index k = 0; k < kept; ++k) {
    ComplexMatrix xr = ComplexMatrix::Zero(d, d);
    for (Index e = 0; e < kdim; ++e) {
      auto [p, q] = pattern[size_t(e)];
      xr(p, q) = keig.vectors(e, k);
    }
    out.basis.push_back(eig.vectors * xr * eig.vectors.adjoint());
  }
  if (kept == 0 || kept == kdim) {
    out.gap = std::numeric_limits<double>::infinity();
  } else {
    out.gap = std::sqrt(std::max(keig.values[kept], 0.0) /
                        std::max(keig.values[kept - 1], 1e-300));
  }
  out.conclusive = out.gap >= 1e3;
  for (const auto& x : out.basis)
    for (const auto& g : gens)
      out.max_residual = std::max(out.max_residual, commutator(g, x).norm());
  return out;
}

}  // namespace

CommutantResult commutant_basis(const std::vector<ComplexMatrix>& generators, double tol,
                                CommutantStrategy strategy) {
  require(!generators.empty(), "commutant needs at least one generator");
  const Index d = generators.front().rows();
  for (const auto& g : generators)
    require(g.rows() == d && g.cols() == d, "generators must share one square dimension");
  switch (strategy) {
    case CommutantStrategy::Dense:
      return commutant_dense(generators, tol);
    case CommutantStrategy::Reduced:
      return commutant_reduced(generators, tol);
    case CommutantStrategy::Auto:
      return (d <= 12) ? commutant_dense(generators, tol) : commutant_reduced(generators, tol);
  }
  throw Error("unreachable");
}

McReport mc_check(const std::vector<ComplexMatrix>& generators, const ComplexMatrix& r,
                  double tol, CommutantStrategy strategy) {
  for (const auto& g : generators)
    require(is_unitary(g, 1e-6), "mc_check generators must be unitary");
  require(is_unitary(r, 1e-6), "mc_check r must be unitary");

  CommutantResult com = commutant_basis(generators, tol, strategy);
  McReport rep;
  rep.commutant_dim = Index(com.basis.size());
  rep.gap = com.gap;
  rep.constraint_spectrum = com.constraint_spectrum;
  double worst = 0.0;
  std::optional<ComplexMatrix> cert;
  for (const auto& x : com.basis) {
    double res = commutator(r, x).norm();
    if (res > worst) {
      worst = res;
      if (res > tol * 1e2) cert = x;
    }
  }
  rep.max_residual = worst;
  if (!com.conclusive) {
    rep.verdict = McVerdict::Inconclusive;
  } else if (worst <= std::max(tol, com.max_residual * 10)) {
    rep.verdict = McVerdict::True;
  } else {
    rep.verdict = McVerdict::False;
    rep.certificate = cert;
  }
  return rep;
}

BlockMcReport direct_sum_mc(const std::vector<std::vector<ComplexMatrix>>& block_generators,
                            const std::vector<ComplexMatrix>& r_blocks, double tol) {
  require(!block_generators.empty(), "direct sum needs at least one block");
  require(block_generators.size() == r_blocks.size(), "one r block per generator block");
  const size_t n_gen = block_generators.front().size();
  for (const auto& blk : block_generators)
    require(blk.size() == n_gen, "every block must register the same generator list");

  std::vector<Index> dims, offsets;
  Index total = 0;
  for (size_t b = 0; b < block_generators.size(); ++b) {
    Index db = r_blocks[b].rows();
    dims.push_back(db);
    offsets.push_back(total);
    total += db;
  }

  std::vector<ComplexMatrix> gens;
  for (size_t g = 0; g < n_gen; ++g) {
    ComplexMatrix big = ComplexMatrix::Zero(total, total);
    for (size_t b = 0; b < block_generators.size(); ++b) {
      big.block(offsets[b], offsets[b], dims[b], dims[b]) = block_generators[b][g];
    }
    gens.push_back(std::move(big));
  }
  ComplexMatrix r = ComplexMatrix::Zero(total, total);
  for (size_t b = 0; b < r_blocks.size(); ++b)
    r.block(offsets[b], offsets[b], dims[b], dims[b]) = r_blocks[b];

  BlockMcReport rep;
  rep.total = mc_check(gens, r, tol);
  for (size_t b = 0; b < block_generators.size(); ++b)
    rep.per_block.push_back(mc_check(block_generators[b], r_blocks[b], tol));

  // disjointness: no commutant element carries weight across distinct blocks
  CommutantResult com = commutant_basis(gens, tol);
  rep.blocks_disjoint = true;
  for (const auto& x : com.basis) {
    for (size_t b1 = 0; b1 < dims.size(); ++b1) {
      for (size_t b2 = b1 + 1; b2 < dims.size(); ++b2) {
        double cross = x.block(offsets[b1], offsets[b2], dims[b1], dims[b2]).norm() +
                       x.block(offsets[b2], offsets[b1], dims[b2], dims[b1]).norm();
        if (cross > 1e-6) {
          rep.blocks_disjoint = false;
          auto pair = std::make_pair(Index(b1), Index(b2));
          if (std::find(rep.equivalent_pairs.begin(), rep.equivalent_pairs.end(), pair) ==
              rep.equivalent_pairs.end())
            rep.equivalent_pairs.push_back(pair);
        }
      }
    }
  }
  return rep;
}

BlockMcReport direct_sum_mc_models(const std::vector<const OrbitModel*>& models,
                            const std::vector<ComplexMatrix>& r_blocks, double tol) {
  require(!models.empty(), "direct sum needs at least one model");
  std::vector<std::vector<ComplexMatrix>> gens;
  const size_t n_el = models.front()->elements().size();
  for (const auto* m : models) {
    require(m->elements().size() == n_el, "models must register identical element lists");
    gens.push_back(m->registered_unitaries());
  }
  return direct_sum_mc(gens, r_blocks, tol);
}

double BorchersReport::max_residual() const {
  return std::max({boost_lightlike_residual, modular_lightlike_residual, transverse_residual,
                   rotation_residual});
}

BorchersReport borchers_check(const OrbitModel& model) {
  BorchersReport rep;
  const FourVector vplus(1, 0, 0, 1), vminus(-1, 0, 0, 1);

  rep.lightlike_signs_definite = true;
  for (const auto& s : model.samples()) {
    if (minkowski(vplus, s.p) <= 0) rep.lightlike_signs_definite = false;
    if (minkowski(vminus, s.p) >= 0) rep.lightlike_signs_definite = false;
  }

  // per block: one-step boost conjugation of lightlike translations at the
  // wrap-commensurate parameter, directly and through Delta^{is}
  for (size_t bi = 0; bi < model.blocks().size(); ++bi) {
    const auto& b = model.blocks()[bi];
    const int n = b.rapidity_count;
    const double step = model.rapidity_step();
    for (int sign : {1, -1}) {
      const double t = model.commensurate_lightlike(Index(bi), sign);
      const FourVector dir = sign == 1 ? vplus : vminus;
      auto phase = [&](int j, double tt) {
        double rap = (j - (n - 1) / 2.0) * step;
        FourVector p = orbit_point(b.mass, b.radius_label, 0.0, rap).p;
        return std::exp(Complex(0, tt * minkowski(dir, p)));
      };
      const double scaled = t * std::exp(sign == 1 ? step : -step);
      double worst = 0.0;
      for (int j = 0; j < n; ++j) {
        // sigma D(t) sigma^{-1} at row j equals D(t) at row j-1 (mod n)
        Complex lhs = phase((j + n - 1) % n, t);
        Complex rhs = phase(j, scaled);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
      rep.boost_lightlike_residual = std::max(rep.boost_lightlike_residual, worst);
    }
  }

  // matrix-level cross-check on the assembled model (per-block t is only exact
  // for single-block models; restrict to the first block's parameter there)
  if (model.blocks().size() == 1) {
    const ComplexMatrix sigma = model.boost_step_unitary();
    const double s_param = -model.rapidity_step() / kTwoPi;  // Delta^{is} = sigma
    const ComplexMatrix dis = model.modular_power(s_param);
    for (int sign : {1, -1}) {
      const double t = model.commensurate_lightlike(0, sign);
      const FourVector dir = sign == 1 ? vplus : vminus;
      const double scaled = t * std::exp(sign == 1 ? model.rapidity_step() : -model.rapidity_step());
      ComplexMatrix u_t = model.translation_unitary(dir * t);
      ComplexMatrix u_scaled = model.translation_unitary(dir * scaled);
      rep.boost_lightlike_residual = std::max(
          rep.boost_lightlike_residual, (sigma * u_t * sigma.adjoint() - u_scaled).norm());
      rep.modular_lightlike_residual = std::max(
          rep.modular_lightlike_residual, (dis * u_t * dis.adjoint() - u_scaled).norm());
    }
  }

  // transverse translations commute with the boost shift and the modular group
  {
    const ComplexMatrix sigma = model.boost_step_unitary();
    const ComplexMatrix dis = model.modular_power(0.37);
    ComplexMatrix perp = model.translation_unitary(FourVector(0, 0.7, -0.4, 0));
    rep.transverse_residual = std::max((sigma * perp - perp * sigma).norm(),
                                       (dis * perp - perp * dis).norm());
  }

  // rotation conjugation of a generic translation is the rotated translation
  {
    bool uniform = true;
    for (const auto& b : model.blocks())
      if (b.angle_count != model.blocks().front().angle_count) uniform = false;
    if (uniform) {
      const ComplexMatrix tau = model.rotation_step_unitary();
      const double theta = kTwoPi / model.blocks().front().angle_count;
      FourVector a(0.21, 0.5, -0.3, 0.4);
      LorentzMatrix rot = lorentz_rotation(3, theta);
      ComplexMatrix lhs = tau * model.translation_unitary(a) * tau.adjoint();
      ComplexMatrix rhs = model.translation_unitary(rot.apply(a));
      rep.rotation_residual = (lhs - rhs).norm();
    }
  }
  return rep;
}

}  // namespace ssw
