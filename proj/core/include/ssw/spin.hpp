#pragma once

// SU(2) representation calculus: spin matrices in the weight basis, Wigner
// D-matrices, Clebsch-Gordan multiplicities, the truncated tensor-restriction
// decomposition, mass-shell boosts A_p and Wigner rotations.

#include <vector>

#include "ssw/lorentz.hpp"
#include "ssw/momentum.hpp"

namespace ssw {

// Half-integer spin label, stored as 2s.
struct SpinLabel {
  int twice = 0;

  SpinLabel() = default;
  explicit SpinLabel(int twice_s);
  static SpinLabel of(double s);

  double value() const { return twice / 2.0; }
  Index dimension() const { return twice + 1; }
  bool operator==(const SpinLabel& o) const { return twice == o.twice; }
  bool operator<(const SpinLabel& o) const { return twice < o.twice; }
};

struct SpinMatrices {
  ComplexMatrix sx, sy, sz;
};

// Generators in the weight basis (S_z diagonal descending s..-s, ladder
// entries real nonnegative); [S_x, S_y] = i S_z cyclically, S^2 = s(s+1).
SpinMatrices spin_matrices(const SpinLabel& s);

// D^s(A) for A in SU(2), via the axis-angle form of A and the spectral
// exponential of the spin generators. D(-1) = (-1)^{2s}.
ComplexMatrix wigner_d(const SpinLabel& s, const SL2Element& a, double tol = kDefaultTol);

struct SpinMultiplicity {
  SpinLabel spin;
  int multiplicity = 0;
};

// j = |s1-s2| ... s1+s2, each once.
std::vector<SpinMultiplicity> clebsch_multiplicities(const SpinLabel& s1, const SpinLabel& s2);

struct SpinDecomposition {
  struct Record {
    double mass = 0.0;
    SpinLabel spin;
    int multiplicity = 0;
  };
  std::vector<Record> records;  // sorted by spin

  Index total_dimension() const;
};

// Truncation of the restriction decomposition: i runs n/2, n/2+1, ..., N in
// integer steps (the literature's restriction rule for V_{rho,n}|_SU(2)),
// and each i contributes j = |s-i| ... s+i once, all at the given mass.
SpinDecomposition decompose_counterexample(int n, const SpinLabel& s, int cutoff_n,
                                           double mass = 1.0);

// A_p = sqrt(ptilde / m): positive Hermitian, det 1, boosts (m,0,0,0) to p.
SL2Element boost_matrix(const MassShellPoint& p);

// A_p^{-1} A A_{Lambda(A)^{-1} p}, an SU(2) element for massive p.
SL2Element wigner_rotation(const MassShellPoint& p, const SL2Element& a,
                           double tol = kDefaultTol);

}  // namespace ssw
