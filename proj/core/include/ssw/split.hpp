#pragma once

// Spectral diagnostics for the split criterion: the trace of a modular
// operator restricted to [0,1], factor subspace checks, and the growth of that
// trace under finite mass-measure surrogates (atomic vs continuum-like).
//
// No nontrivial standard inclusion K strictly inside H exists in finite
// dimension (both would have real dimension n), so this module consumes
// spectral data rather than constructing split inclusions; the per-mass
// generators are model plumbing (geometric lambda <-> 1/lambda pairs), not
// physical spectra.

#include <string>
#include <vector>

#include "ssw/subspace.hpp"

namespace ssw {

struct ModularSpectrum {
  std::vector<double> eigenvalues;
  std::string provenance = "user-supplied";  // or "model-generated"
};

// every eigenvalue positive, multiset closed under lambda -> 1/lambda
bool spectrum_valid(const ModularSpectrum& s, double tol = kDefaultTol);

// sum of the eigenvalues <= 1 (the finite-dimensional trace of Delta|_[0,1])
double trace_below_one(const ModularSpectrum& s);

// F is a factor subspace iff F intersect F' = {0}.
bool factor_check(const RealSubspace& f, double tol = kDefaultTol);

struct MassPointSurrogate {
  double mass = 0.0;
  int weight = 1;     // finite multiple of the per-mass block
  double ratio = 0.5; // geometric generator: eigenvalues ratio^k, ratio^-k
  int depth = 3;      // k = 1..depth
};

ModularSpectrum generator_spectrum(const MassPointSurrogate& point);

struct ComposeResult {
  ModularSpectrum spectrum;
  double total_trace_below_one = 0.0;
  std::vector<double> per_mass_trace;
};

// concatenation over distinct mass points; duplicate masses are an error
ComposeResult compose_masses(const std::vector<MassPointSurrogate>& points,
                             double tol = kDefaultTol);

struct SurrogateFamily {
  std::string mode = "continuum";  // "continuum" or "atomic"
  // continuum: refinement N places N equal-weight mass points on [mass_lo, mass_hi]
  double mass_lo = 0.1;
  double mass_hi = 2.0;
  MassPointSurrogate generator;               // per-point generator (mass filled in)
  std::vector<MassPointSurrogate> atoms;      // atomic mode: the fixed atom list
};

struct GrowthReport {
  std::vector<std::pair<int, double>> table;  // (N, trace)
  std::string verdict;                        // "atomic-like" or "continuum-like divergence"
  double per_point_bound = 0.0;               // c with trace >= N c in continuum mode
};

GrowthReport growth_report(const SurrogateFamily& family, const std::vector<int>& refinements);

}  // namespace ssw
