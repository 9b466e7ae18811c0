#include "ssw/split.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ssw {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace

bool spectrum_valid(const ModularSpectrum& s, double tol) {
  for (double lam : s.eigenvalues)
    if (!(lam > 0)) return false;
  // lambda <-> 1/lambda pairing: sorted logs must be antisymmetric
  std::vector<double> logs;
  logs.reserve(s.eigenvalues.size());
  for (double lam : s.eigenvalues) logs.push_back(std::log(lam));
  std::sort(logs.begin(), logs.end());
  for (size_t i = 0; i < logs.size(); ++i) {
    if (std::abs(logs[i] + logs[logs.size() - 1 - i]) > tol * 1e2) return false;
  }
  return true;
}

double trace_below_one(const ModularSpectrum& s) {
  double total = 0.0;
  for (double lam : s.eigenvalues) {
    require(lam > 0, "modular spectrum must be positive");
    if (lam <= 1.0) total += lam;
  }
  return total;
}

bool factor_check(const RealSubspace& f, double tol) {
  if (f.real_dim() == 0) return true;
  RealSubspace fp = symplectic_complement(f);
  return intersect(f, fp, std::max(tol, 1e-8)).real_dim() == 0;
}

ModularSpectrum generator_spectrum(const MassPointSurrogate& point) {
  require(point.ratio > 0 && point.ratio < 1, "generator ratio must lie in (0,1)");
  require(point.depth >= 1, "generator depth must be positive");
  require(point.weight >= 1, "mass point weight must be a positive multiple");
  ModularSpectrum out;
  out.provenance = "model-generated";
  for (int copy = 0; copy < point.weight; ++copy) {
    for (int k = 1; k <= point.depth; ++k) {
      out.eigenvalues.push_back(std::pow(point.ratio, k));
      out.eigenvalues.push_back(std::pow(point.ratio, -k));
    }
  }
  return out;
}

ComposeResult compose_masses(const std::vector<MassPointSurrogate>& points, double tol) {
  std::set<double> seen;
  ComposeResult out;
  out.spectrum.provenance = "model-generated";
  for (const auto& p : points) {
    for (double m : seen)
      require(std::abs(m - p.mass) > tol, "duplicate mass in surrogate");
    seen.insert(p.mass);
    ModularSpectrum gen = generator_spectrum(p);
    double tr = trace_below_one(gen);
    out.per_mass_trace.push_back(tr);
    out.total_trace_below_one += tr;
    out.spectrum.eigenvalues.insert(out.spectrum.eigenvalues.end(), gen.eigenvalues.begin(),
                                    gen.eigenvalues.end());
  }
  return out;
}

GrowthReport growth_report(const SurrogateFamily& family, const std::vector<int>& refinements) {
  require(family.mode == "continuum" || family.mode == "atomic",
          "surrogate mode must be 'continuum' or 'atomic'");
  GrowthReport rep;
  for (int n : refinements) {
    require(n >= 1, "refinement count must be positive");
    std::vector<MassPointSurrogate> points;
    if (family.mode == "continuum") {
      require(family.mass_hi > family.mass_lo, "mass interval must be nondegenerate");
      for (int k = 0; k < n; ++k) {
        MassPointSurrogate p = family.generator;
        p.mass = family.mass_lo + (family.mass_hi - family.mass_lo) * (k + 0.5) / n;
        points.push_back(p);
      }
    } else {
      // an atomic measure sees the same atoms at every grid refinement
      points = family.atoms;
    }
    rep.table.emplace_back(n, compose_masses(points).total_trace_below_one);
  }
  if (family.mode == "continuum") {
    rep.per_point_bound = trace_below_one(generator_spectrum(family.generator));
    rep.verdict = "continuum-like divergence";
  } else {
    rep.verdict = "atomic-like";
  }
  // verdict cross-check against the measured growth
  if (rep.table.size() >= 2) {
    double first = rep.table.front().second;
    double last = rep.table.back().second;
    double n_ratio = double(rep.table.back().first) / rep.table.front().first;
    bool grows = last > first * std::max(1.5, 0.5 * n_ratio);
    if (family.mode == "continuum" && !grows) rep.verdict = "inconclusive";
    if (family.mode == "atomic" && std::abs(last - first) > 1e-12 * std::max(1.0, first))
      rep.verdict = "inconclusive";
  }
  return rep;
}

}  // namespace ssw
