#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <functional>
#include <map>
#include <random>

#include "ssw/linalg.hpp"
#include "ssw/lorentz.hpp"
#include "ssw/momentum.hpp"
#include "ssw/spin.hpp"

namespace ssw::oracle {

// Antilinear adjoint straight from <T* u, v> = <T v, u> with <a,b> = a^dag b,
// evaluated through the operator's action on basis vectors only.
inline ComplexMatrix antilinear_adjoint_matrix(
    const std::function<ComplexVector(const ComplexVector&)>& action, Index n) {
  ComplexMatrix m(n, n);
  for (Index j = 0; j < n; ++j) {
    ComplexVector ej = ComplexVector::Zero(n);
    ej[j] = 1.0;
    ComplexVector tej = action(ej);
    // (T* e_k)_j = (T e_j)_k
    for (Index k = 0; k < n; ++k) m(j, k) = tej[k];
  }
  return m;
}

// scaling-and-squaring Taylor exponential, no spectral decomposition
inline ComplexMatrix expm_taylor(const ComplexMatrix& x) {
  const Index n = x.rows();
  int squarings = 0;
  double norm = x.norm();
  while (norm > 0.25) {
    norm /= 2;
    ++squarings;
  }
  ComplexMatrix scaled = x / std::pow(2.0, squarings);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  ComplexMatrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled / double(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

// multiplicity of spin j inside s1 (x) s2 by numerical character pairing on a
// theta grid with the SU(2) class measure sin^2(theta/2)/pi
inline int character_multiplicity(const SpinLabel& s1, const SpinLabel& s2, const SpinLabel& j) {
  auto chi = [](const SpinLabel& s, double theta) {
    double half = theta / 2.0;
    if (std::abs(std::sin(half)) < 1e-9) {
      // limit: dimension times cos factor, use a nudged angle
      half += 1e-7;
    }
    return std::sin((s.twice + 1) * half) / std::sin(half);
  };
  const int grid = 20000;
  double acc = 0.0;
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < grid; ++k) {
    double theta = 2.0 * pi * (k + 0.5) / grid;
    double weight = std::sin(theta / 2.0) * std::sin(theta / 2.0) / pi;
    acc += chi(s1, theta) * chi(s2, theta) * chi(j, theta) * weight * (2.0 * pi / grid);
  }
  return int(std::lround(acc));
}

// decomposition of (sum_i D^i) (x) D^s by simultaneous diagonalization of the
// total Casimir; returns multiplicity per twice_j
inline std::map<int, int> brute_force_tensor_decomposition(const std::vector<SpinLabel>& left,
                                                           const SpinLabel& s) {
  Index dim_left = 0;
  for (const auto& l : left) dim_left += l.dimension();
  const Index d = dim_left * s.dimension();

  auto kron = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
      for (Index jj = 0; jj < a.cols(); ++jj)
        out.block(i * b.rows(), jj * b.cols(), b.rows(), b.cols()) = a(i, jj) * b;
    return out;
  };

  ComplexMatrix lx = ComplexMatrix::Zero(dim_left, dim_left), ly = lx, lz = lx;
  Index off = 0;
  for (const auto& l : left) {
    SpinMatrices g = spin_matrices(l);
    lx.block(off, off, l.dimension(), l.dimension()) = g.sx;
    ly.block(off, off, l.dimension(), l.dimension()) = g.sy;
    lz.block(off, off, l.dimension(), l.dimension()) = g.sz;
    off += l.dimension();
  }
  SpinMatrices r = spin_matrices(s);
  ComplexMatrix ids = ComplexMatrix::Identity(s.dimension(), s.dimension());
  ComplexMatrix idl = ComplexMatrix::Identity(dim_left, dim_left);
  ComplexMatrix jx = kron(lx, ids) + kron(idl, r.sx);
  ComplexMatrix jy = kron(ly, ids) + kron(idl, r.sy);
  ComplexMatrix jz = kron(lz, ids) + kron(idl, r.sz);
  ComplexMatrix casimir = jx * jx + jy * jy + jz * jz;
  HermitianEigen eig = hermitian_eig(casimir, 1e-8);

  std::map<int, int> counts;  // twice_j -> eigenvalue count
  for (Index k = 0; k < d; ++k) {
    // j(j+1) = lambda: j = (-1 + sqrt(1 + 4 lambda))/2
    double jval = 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, eig.values[k])));
    int tj = int(std::lround(2.0 * jval));
    counts[tj] += 1;
  }
  std::map<int, int> mult;
  for (auto& [tj, c] : counts) {
    if (c % (tj + 1) != 0) return {};  // not a clean decomposition; caller fails
    mult[tj] = c / (tj + 1);
  }
  return mult;
}

inline MassShellPoint random_mass_shell(std::mt19937_64& rng, double mass, double pmax = 3.0) {
  std::uniform_real_distribution<double> uni(-pmax, pmax);
  while (true) {
    double p1 = uni(rng), p2 = uni(rng), p3 = uni(rng);
    if (mass <= 0 && p1 * p1 + p2 * p2 < 1e-6) continue;  // stay off the excluded orbits
    return MassShellPoint::from_spatial(mass, p1, p2, p3);
  }
}

}  // namespace ssw::oracle
