#include "ssw/io.hpp"

#include <fstream>

namespace ssw {

namespace {

double num(const Json& j, const std::string& context) {
  if (!j.is_number()) throw IoError(context + ": expected a number");
  return j.get<double>();
}

Complex complex_from(const Json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2)
    throw IoError(context + ": complex entries are [re, im] pairs");
  return Complex(num(j[0], context), num(j[1], context));
}

Json complex_to(const Complex& z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

void check_keys(const Json& j, const std::vector<std::string>& allowed,
                const std::string& context) {
  if (!j.is_object()) throw IoError(context + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw IoError(context + ": unknown key '" + it.key() + "'");
    }
  }
}

ComplexMatrix matrix_from_json(const Json& j) {
  check_keys(j, {"dim", "entries", "antilinear"}, "matrix");
  if (!j.contains("dim") || !j.contains("entries")) throw IoError("matrix: dim and entries required");
  const Index n = j["dim"].get<Index>();
  if (n <= 0) throw IoError("matrix: dim must be positive");
  const Json& entries = j["entries"];
  if (!entries.is_array() || Index(entries.size()) != n * n)
    throw IoError("matrix: entries must hold dim*dim [re, im] pairs, row-major");
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) m(r, c) = complex_from(entries[size_t(r * n + c)], "matrix");
  return m;
}

Json matrix_to_json(const ComplexMatrix& m, bool antilinear) {
  Json j;
  j["dim"] = m.rows();
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) entries.push_back(complex_to(m(r, c)));
  j["entries"] = std::move(entries);
  if (antilinear) j["antilinear"] = true;
  return j;
}

bool matrix_json_is_antilinear(const Json& j) {
  return j.is_object() && j.contains("antilinear") && j["antilinear"].get<bool>();
}

ComplexMatrix subspace_basis_from_json(const Json& j) {
  check_keys(j, {"dim", "basis"}, "subspace");
  if (!j.contains("dim") || !j.contains("basis")) throw IoError("subspace: dim and basis required");
  const Index n = j["dim"].get<Index>();
  if (n <= 0) throw IoError("subspace: dim must be positive");
  const Json& basis = j["basis"];
  if (!basis.is_array() || basis.empty()) throw IoError("subspace: basis must be a nonempty array");
  ComplexMatrix b(n, Index(basis.size()));
  for (size_t col = 0; col < basis.size(); ++col) {
    const Json& vec = basis[col];
    if (!vec.is_array() || Index(vec.size()) != n)
      throw IoError("subspace: every basis vector needs dim entries");
    for (Index r = 0; r < n; ++r) b(r, Index(col)) = complex_from(vec[size_t(r)], "subspace");
  }
  return b;
}

Json subspace_to_json(const ComplexMatrix& basis) {
  Json j;
  j["dim"] = basis.rows();
  Json vecs = Json::array();
  for (Index c = 0; c < basis.cols(); ++c) {
    Json vec = Json::array();
    for (Index r = 0; r < basis.rows(); ++r) vec.push_back(complex_to(basis(r, c)));
    vecs.push_back(std::move(vec));
  }
  j["basis"] = std::move(vecs);
  return j;
}

OrbitModelSpec model_spec_from_json(const Json& j) {
  check_keys(j, {"masses", "multiplicities", "orbits", "rapidity_step", "elements", "sample_budget"},
             "model");
  OrbitModelSpec spec;
  if (!j.contains("masses") || !j["masses"].is_array() || j["masses"].empty())
    throw IoError("model: masses must be a nonempty array");
  for (const auto& m : j["masses"]) spec.masses.push_back(num(m, "model.masses"));
  if (j.contains("multiplicities")) {
    for (const auto& m : j["multiplicities"]) {
      if (!m.is_number_integer()) throw IoError("model.multiplicities: integers required");
      spec.multiplicities.push_back(m.get<int>());
    }
  }
  if (!j.contains("orbits") || !j["orbits"].is_array() || j["orbits"].empty())
    throw IoError("model: orbits must be a nonempty array");
  for (const auto& o : j["orbits"]) {
    check_keys(o, {"r", "angle_N", "rapidity_N"}, "model.orbits[]");
    OrbitSpec orbit;
    if (o.contains("r")) orbit.radius_label = num(o["r"], "model.orbits[].r");
    if (o.contains("angle_N")) orbit.angle_count = o["angle_N"].get<int>();
    if (o.contains("rapidity_N")) orbit.rapidity_count = o["rapidity_N"].get<int>();
    spec.orbits.push_back(orbit);
  }
  if (j.contains("rapidity_step")) spec.rapidity_step = num(j["rapidity_step"], "model.rapidity_step");
  if (j.contains("sample_budget")) spec.sample_budget = j["sample_budget"].get<Index>();
  if (j.contains("elements")) {
    for (const auto& el : j["elements"]) {
      if (el.is_string()) {
        const std::string name = el.get<std::string>();
        if (name == "boost_step") spec.elements.push_back(ElementSpec::boost_step());
        else if (name == "rotation_step") spec.elements.push_back(ElementSpec::rotation_step());
        else if (name == "reflection") spec.elements.push_back(ElementSpec::reflection());
        else if (name == "two_pi") spec.elements.push_back(ElementSpec::two_pi());
        else throw IoError("model.elements: unknown element '" + name + "'");
      } else if (el.is_object()) {
        check_keys(el, {"translation"}, "model.elements[]");
        if (!el.contains("translation") || !el["translation"].is_array() ||
            el["translation"].size() != 4)
          throw IoError("model.elements: translation needs [a0,a1,a2,a3]");
        FourVector a;
        for (int i = 0; i < 4; ++i) a[i] = num(el["translation"][size_t(i)], "translation");
        spec.elements.push_back(ElementSpec::translate(a));
      } else {
        throw IoError("model.elements: entries are names or {\"translation\": [...]}");
      }
    }
  }
  return spec;
}

Json model_spec_to_json(const OrbitModelSpec& spec) {
  Json j;
  j["masses"] = spec.masses;
  if (!spec.multiplicities.empty()) j["multiplicities"] = spec.multiplicities;
  Json orbits = Json::array();
  for (const auto& o : spec.orbits) {
    Json orbit;
    orbit["r"] = o.radius_label;
    orbit["angle_N"] = o.angle_count;
    orbit["rapidity_N"] = o.rapidity_count;
    orbits.push_back(std::move(orbit));
  }
  j["orbits"] = std::move(orbits);
  j["rapidity_step"] = spec.rapidity_step;
  Json elements = Json::array();
  for (const auto& el : spec.elements) {
    switch (el.kind) {
      case ElementKind::BoostStep: elements.push_back("boost_step"); break;
      case ElementKind::RotationStep: elements.push_back("rotation_step"); break;
      case ElementKind::Reflection: elements.push_back("reflection"); break;
      case ElementKind::TwoPi: elements.push_back("two_pi"); break;
      case ElementKind::Translation: {
        Json t;
        t["translation"] = {el.translation[0], el.translation[1], el.translation[2],
                            el.translation[3]};
        elements.push_back(std::move(t));
        break;
      }
    }
  }
  j["elements"] = std::move(elements);
  return j;
}

ModularSpectrum spectrum_from_json(const Json& j) {
  check_keys(j, {"eigenvalues", "provenance"}, "spectrum");
  if (!j.contains("eigenvalues") || !j["eigenvalues"].is_array())
    throw IoError("spectrum: eigenvalues array required");
  ModularSpectrum s;
  for (const auto& v : j["eigenvalues"]) s.eigenvalues.push_back(num(v, "spectrum.eigenvalues"));
  if (j.contains("provenance")) s.provenance = j["provenance"].get<std::string>();
  return s;
}

Json spectrum_to_json(const ModularSpectrum& s) {
  Json j;
  j["eigenvalues"] = s.eigenvalues;
  j["provenance"] = s.provenance;
  return j;
}

namespace {

MassPointSurrogate mass_point_from(const Json& j, bool require_mass) {
  check_keys(j, {"mass", "weight", "generator", "ratio", "depth"}, "mass point");
  MassPointSurrogate p;
  if (j.contains("mass")) {
    p.mass = num(j["mass"], "mass point");
  } else if (require_mass) {
    throw IoError("mass point: mass required");
  }
  if (j.contains("weight")) p.weight = j["weight"].get<int>();
  if (j.contains("generator")) {
    check_keys(j["generator"], {"ratio", "depth"}, "mass point generator");
    if (j["generator"].contains("ratio")) p.ratio = num(j["generator"]["ratio"], "generator.ratio");
    if (j["generator"].contains("depth")) p.depth = j["generator"]["depth"].get<int>();
  }
  if (j.contains("ratio")) p.ratio = num(j["ratio"], "ratio");
  if (j.contains("depth")) p.depth = j["depth"].get<int>();
  return p;
}

}  // namespace

SurrogateFamily surrogate_from_json(const Json& j) {
  check_keys(j, {"mode", "mass_lo", "mass_hi", "generator", "atoms"}, "surrogate");
  SurrogateFamily fam;
  if (j.contains("mode")) fam.mode = j["mode"].get<std::string>();
  if (j.contains("mass_lo")) fam.mass_lo = num(j["mass_lo"], "surrogate.mass_lo");
  if (j.contains("mass_hi")) fam.mass_hi = num(j["mass_hi"], "surrogate.mass_hi");
  if (j.contains("generator")) fam.generator = mass_point_from(j["generator"], false);
  if (j.contains("atoms")) {
    if (!j["atoms"].is_array()) throw IoError("surrogate.atoms: array required");
    for (const auto& a : j["atoms"]) fam.atoms.push_back(mass_point_from(a, true));
  }
  if (fam.mode == "atomic" && fam.atoms.empty())
    throw IoError("surrogate: atomic mode needs atoms");
  return fam;
}

std::vector<MassPointSurrogate> mass_points_from_json(const Json& j) {
  if (!j.is_array()) throw IoError("mass point list: JSON array required");
  std::vector<MassPointSurrogate> out;
  for (const auto& p : j) out.push_back(mass_point_from(p, true));
  return out;
}

}  // namespace ssw
