// ssw: batch workbench for standard subspaces, wedge geometry, orbit models
// and split diagnostics. Exit codes: 0 = pass, 1 = mathematical check failed,
// 2 = input/usage error.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ssw/io.hpp"
#include "ssw/net.hpp"
#include "ssw/spin.hpp"

namespace {

using ssw::Json;

constexpr double kPi = 3.14159265358979323846;

struct Output {
  std::string path;    // empty = stdout
  std::string format;  // json | csv | pretty

  void emit_json(const Json& j) const {
    if (!path.empty()) {
      ssw::save_json_file(path, j);
    } else {
      std::cout << j.dump(2) << "\n";
    }
  }
  void emit_text(const std::string& text) const {
    if (!path.empty()) {
      std::ofstream out(path);
      if (!out) throw ssw::IoError("cannot write '" + path + "'");
      out << text;
    } else {
      std::cout << text;
    }
  }
};

Json residual_entry(const std::string& name, double value, double tol) {
  Json j;
  j["check"] = name;
  j["residual"] = value;
  j["pass"] = value <= tol;
  return j;
}

std::string format_matrix4(const ssw::Matrix4d& m) {
  std::ostringstream os;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%12.6f", m(r, c));
      os << buf << (c == 3 ? "" : " ");
    }
    os << "\n";
  }
  return os.str();
}

int cmd_subspace(const std::string& mode, const std::string& input, double tol,
                 const Output& out) {
  Json jin = ssw::load_json_file(input);
  ssw::ComplexMatrix basis = ssw::subspace_basis_from_json(jin);

  if (mode == "check") {
    Json rep;
    rep["command"] = "subspace check";
    try {
      ssw::StandardSubspace h = ssw::StandardSubspace::from_vectors(basis, tol);
      rep["standard"] = true;
      rep["ambient_dim"] = h.ambient_dim();
      rep["real_dim"] = h.real().real_dim();
      rep["cyclic"] = h.real().is_cyclic(tol);
      rep["separating"] = h.real().is_separating(tol);
      out.emit_json(rep);
      return 0;
    } catch (const ssw::Error& e) {
      rep["standard"] = false;
      rep["reason"] = e.what();
      out.emit_json(rep);
      return 1;
    }
  }

  ssw::StandardSubspace h = ssw::StandardSubspace::from_vectors(basis, tol);
  if (mode == "modular") {
    ssw::HermitianEigen eig = ssw::hermitian_eig(h.modular(), tol);
    Json rep;
    rep["command"] = "subspace modular";
    rep["delta_eigenvalues"] = std::vector<double>(eig.values.data(),
                                                   eig.values.data() + eig.values.size());
    rep["s_matrix"] = ssw::matrix_to_json(h.tomita().coeff(), true);
    rep["j_matrix"] = ssw::matrix_to_json(h.conjugation().coeff(), true);
    Json residuals = Json::array();
    ssw::ComplexMatrix id = ssw::ComplexMatrix::Identity(h.ambient_dim(), h.ambient_dim());
    residuals.push_back(residual_entry("s_squared", (h.tomita().squared() - id).norm(), 1e-9));
    ssw::ComplexMatrix jdj = ssw::compose(ssw::compose(h.conjugation(), h.modular()),
                                          h.conjugation());
    ssw::ComplexMatrix dinv = h.modular().partialPivLu().solve(id);
    residuals.push_back(residual_entry("j_delta_j_inverse", (jdj - dinv).norm(), 1e-8));
    residuals.push_back(
        residual_entry("det_delta_unit", std::abs(std::abs(h.modular().determinant()) - 1.0), 1e-8));
    rep["residuals"] = residuals;
    out.emit_json(rep);
    return 0;
  }
  if (mode == "complement") {
    ssw::StandardSubspace hp = h.complement(tol);
    Json rep;
    rep["command"] = "subspace complement";
    rep["basis"] = ssw::subspace_to_json(hp.real().basis());
    double adj = (hp.tomita().coeff() - h.tomita().adjoint().coeff()).norm();
    rep["s_adjoint_residual"] = adj;
    ssw::RealSubspace jh = h.real().map_antilinear(h.conjugation());
    rep["equals_jh_residual"] = ssw::subspace_distance(hp.real(), jh);
    out.emit_json(rep);
    return 0;
  }
  throw ssw::IoError("unknown subspace mode");
}

int cmd_lorentz_cover(const std::string& input, int boost_axis, int rot_axis, double param,
                      double tol, const Output& out) {
  ssw::SL2Element a;
  if (!input.empty()) {
    Json jin = ssw::load_json_file(input);
    ssw::ComplexMatrix m = ssw::matrix_from_json(jin);
    if (m.rows() != 2) throw ssw::IoError("lorentz cover: SL(2,C) input must be 2x2");
    a = ssw::SL2Element(m);
  } else if (boost_axis > 0) {
    a = ssw::sl2_boost(boost_axis, param);
  } else if (rot_axis > 0) {
    a = ssw::sl2_rotation(rot_axis, param);
  } else {
    throw ssw::IoError("lorentz cover: provide --input, --boost or --rotation");
  }
  ssw::LorentzMatrix l = ssw::covering_map(a, tol);
  if (out.format == "pretty") {
    out.emit_text(format_matrix4(l.m));
    return 0;
  }
  Json rep;
  rep["command"] = "lorentz cover";
  Json rows = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(l.m(r, c));
    rows.push_back(std::move(row));
  }
  rep["lorentz"] = std::move(rows);
  rep["metric_residual"] = l.metric_defect();
  rep["det_residual"] = std::abs(l.m.determinant() - 1.0);
  rep["kernel_check"] = (ssw::covering_map(-a, tol).m - l.m).norm();
  out.emit_json(rep);
  return 0;
}

int cmd_orbit_reflect(double mass, const std::string& pstr, double tol, const Output& out) {
  double p1 = 0, p2 = 0, p3 = 0;
  {
    std::istringstream is(pstr);
    char c1 = 0, c2 = 0;
    if (!(is >> p1 >> c1 >> p2 >> c2 >> p3) || c1 != ',' || c2 != ',')
      throw ssw::IoError("--p expects \"p1,p2,p3\"");
  }
  ssw::MassShellPoint p = ssw::MassShellPoint::from_spatial(mass, p1, p2, p3);
  ssw::ReflectionDecomposition rd = ssw::reflect_decompose(p, tol);

  ssw::FourVector lhs = ssw::lorentz_boost(3, rd.t_p)
                            .apply(ssw::lorentz_rotation(3, rd.theta_p).apply(p.p));
  ssw::FourVector rhs = ssw::lorentz_rotation(1, kPi).apply(p.p);
  double residual = (lhs.eigen() - rhs.eigen()).norm();

  Json rep;
  rep["command"] = "orbit reflect";
  rep["mass"] = mass;
  rep["p"] = {p.p[0], p.p[1], p.p[2], p.p[3]};
  rep["t_p"] = rd.t_p;
  rep["theta_p"] = rd.theta_p;
  rep["residual"] = residual;
  out.emit_json(rep);
  return residual <= 1e-9 ? 0 : 1;
}

int cmd_mc(const std::string& model_path, double tol, const std::string& certificate_path,
           const Output& out) {
  Json jin = ssw::load_json_file(model_path);
  ssw::OrbitModelSpec spec = ssw::model_spec_from_json(jin);
  ssw::OrbitModel model = ssw::OrbitModel::build(spec);
  std::vector<ssw::ComplexMatrix> gens = model.registered_unitaries();
  if (gens.empty()) throw ssw::IoError("mc: the model registers no elements");
  ssw::ComplexMatrix r = model.reflection_unitary();
  ssw::McReport mc = ssw::mc_check(gens, r, tol);

  Json rep;
  rep["command"] = "mc";
  rep["dim"] = model.dim();
  rep["verdict"] = mc.verdict == ssw::McVerdict::True
                       ? "true"
                       : (mc.verdict == ssw::McVerdict::False ? "false" : "inconclusive");
  rep["commutant_dim"] = mc.commutant_dim;
  rep["max_residual"] = mc.max_residual;
  rep["gap"] = std::isfinite(mc.gap) ? Json(mc.gap) : Json("infinite");
  if (mc.verdict == ssw::McVerdict::Inconclusive) {
    rep["constraint_singular_values"] = std::vector<double>(
        mc.constraint_spectrum.data(), mc.constraint_spectrum.data() + mc.constraint_spectrum.size());
  }
  if (mc.certificate) {
    std::string path = certificate_path.empty() ? "mc_certificate.json" : certificate_path;
    ssw::save_json_file(path, ssw::matrix_to_json(*mc.certificate));
    rep["certificate"] = path;
  }
  out.emit_json(rep);
  return mc.verdict == ssw::McVerdict::True ? 0 : 1;
}

int cmd_spin_decompose(int n, double s, int cutoff, double mass, const Output& out) {
  ssw::SpinDecomposition dec =
      ssw::decompose_counterexample(n, ssw::SpinLabel::of(s), cutoff, mass);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "mass,spin,multiplicity\n";
    for (const auto& r : dec.records)
      os << r.mass << "," << r.spin.value() << "," << r.multiplicity << "\n";
    out.emit_text(os.str());
    return 0;
  }
  Json rows = Json::array();
  for (const auto& r : dec.records) {
    Json row;
    row["mass"] = r.mass;
    row["spin"] = r.spin.value();
    row["multiplicity"] = r.multiplicity;
    rows.push_back(std::move(row));
  }
  out.emit_json(rows);
  return 0;
}

ssw::NetModel net_from_spec(const Json& j, double tol) {
  ssw::check_keys(j, {"model", "canonical", "fermionic", "J", "K", "reflection", "two_pi", "wedges"},
                  "net");
  if (j.contains("wedges")) {
    for (const auto& w : j["wedges"]) {
      std::string name = w.get<std::string>();
      if (name != "W3" && name != "W3p")
        throw ssw::IoError("net: unknown wedge '" + name + "' (registered family: W3, W3p)");
    }
  }
  if (j.contains("canonical") && j["canonical"].get<bool>()) {
    if (!j.contains("model")) throw ssw::IoError("net: canonical nets need a model");
    Json model_json = j["model"].is_string()
                          ? ssw::load_json_file(j["model"].get<std::string>())
                          : j["model"];
    ssw::OrbitModelSpec spec = ssw::model_spec_from_json(model_json);
    return ssw::NetModel::canonical(ssw::OrbitModel::build(spec), tol);
  }
  if (!j.contains("J") || !j.contains("K"))
    throw ssw::IoError("net: either canonical+model or explicit J and K");
  ssw::AntilinearOperator jop(ssw::matrix_from_json(j["J"]));
  ssw::ComplexMatrix k = ssw::matrix_from_json(j["K"]);
  bool fermionic = j.contains("fermionic") && j["fermionic"].get<bool>();
  std::vector<ssw::NetElement> action;
  if (j.contains("reflection")) {
    action.push_back({"reflection", ssw::matrix_from_json(j["reflection"]),
                      ssw::NetElementKind::Reflection, {}});
  }
  if (j.contains("two_pi")) {
    action.push_back({"two_pi", ssw::matrix_from_json(j["two_pi"]), ssw::NetElementKind::TwoPi, {}});
  } else if (fermionic) {
    action.push_back({"two_pi", -ssw::ComplexMatrix::Identity(k.rows(), k.cols()),
                      ssw::NetElementKind::TwoPi, {}});
  }
  if (fermionic && !j.contains("reflection"))
    throw ssw::IoError("net: a fermionic spec needs the reflection unitary");
  return ssw::NetModel::bgl(jop, k, std::move(action), fermionic, tol);
}

int cmd_net_verify(const std::string& spec_path, const std::string& checks, double tol,
                   const Output& out) {
  Json jin = ssw::load_json_file(spec_path);
  ssw::NetModel net = net_from_spec(jin, tol);
  std::vector<ssw::NetCheck> all = ssw::verify_axioms(net, tol);

  std::vector<std::string> wanted;
  if (!checks.empty()) {
    std::istringstream is(checks);
    std::string token;
    while (std::getline(is, token, ',')) {
      if (token == "bw") token = "bisognano-wichmann";
      else if (token == "borchers") token = "borchers-halfsided";
      else if (token == "locality") token = "twisted-locality";
      else if (token == "rs") token = "reeh-schlieder";
      wanted.push_back(token);
    }
  }
  auto selected = [&](const std::string& name) {
    if (wanted.empty()) return true;
    for (const auto& w : wanted) {
      if (name == w) return true;
      if (w == "twist" && name.rfind("twist-", 0) == 0) return true;
    }
    return false;
  };

  Json rows = Json::array();
  bool all_pass = true;
  bool any = false;
  for (const auto& c : all) {
    if (!selected(c.name)) continue;
    any = true;
    Json row;
    row["axiom"] = c.name;
    row["pass"] = c.pass;
    row["residual"] = c.residual;
    row["note"] = c.note;
    rows.push_back(std::move(row));
    all_pass = all_pass && c.pass;
  }
  if (!any) throw ssw::IoError("net verify: no known check selected by --checks");
  Json rep;
  rep["command"] = "net verify";
  rep["checks"] = std::move(rows);
  rep["all_pass"] = all_pass;
  out.emit_json(rep);
  return all_pass ? 0 : 1;
}

int cmd_net_demo(double omega, double t_probe, double tol, const Output& out) {
  ssw::OrbitModelSpec spec;
  spec.masses = {1.0};
  spec.orbits = {{1.0, 4, 7}};
  spec.rapidity_step = 3.0;
  spec.elements = {ssw::ElementSpec::boost_step(), ssw::ElementSpec::rotation_step(),
                   ssw::ElementSpec::reflection(),
                   ssw::ElementSpec::translate(ssw::FourVector(0.35, 0.2, -0.15, 0.4))};
  ssw::OrbitModel model = ssw::OrbitModel::build(spec);
  ssw::NetModel net = ssw::NetModel::canonical(model, tol);
  ssw::TensorDemoReport demo = ssw::tensor_demonstrator(net, omega, t_probe, tol);

  Json rep;
  rep["command"] = "net demo-counterexample";
  rep["omega"] = omega;
  rep["t"] = t_probe;
  rep["delta_factorization_residual"] = demo.delta_factorization_residual;
  rep["invariance_residual"] = demo.invariance_residual;
  rep["ui_z_residual"] = demo.ui_z_residual;
  rep["uv_z_deviation"] = demo.uv_z_deviation;
  rep["uv_z_eigenphases"] = demo.uv_z_eigenphases;
  rep["bw_status_uv"] = demo.uv_bw_fails ? "B-W FAILS for U_V" : "B-W holds for U_V";
  rep["noncovariance_mismatch"] = demo.noncovariance_mismatch;
  rep["borchers_quotient_jgj_residual"] = demo.jgj_residual;
  rep["borchers_quotient_deviation"] = demo.g_deviation;
  out.emit_json(rep);
  return 0;
}

int cmd_split_trace(const std::string& spectrum_path, const Output& out) {
  ssw::ModularSpectrum s = ssw::spectrum_from_json(ssw::load_json_file(spectrum_path));
  Json rep;
  rep["command"] = "split trace";
  rep["trace_below_one"] = ssw::trace_below_one(s);
  rep["pairing_valid"] = ssw::spectrum_valid(s);
  out.emit_json(rep);
  return 0;
}

int cmd_split_growth(const std::string& surrogate_path, int max_refinement, const Output& out) {
  ssw::SurrogateFamily fam = ssw::surrogate_from_json(ssw::load_json_file(surrogate_path));
  std::vector<int> refinements;
  for (int n = 1; n <= max_refinement; ++n) refinements.push_back(n);
  ssw::GrowthReport rep = ssw::growth_report(fam, refinements);
  if (out.format == "csv") {
    std::ostringstream os;
    os << "N,trace_below_one\n";
    for (const auto& [n, tr] : rep.table) os << n << "," << tr << "\n";
    out.emit_text(os.str());
    return 0;
  }
  Json j;
  j["command"] = "split growth";
  Json table = Json::array();
  for (const auto& [n, tr] : rep.table) table.push_back({n, tr});
  j["table"] = std::move(table);
  j["verdict"] = rep.verdict;
  j["per_point_bound"] = rep.per_point_bound;
  out.emit_json(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"standard-subspace workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = ssw::kDefaultTol;
  std::uint64_t seed = 20250808;
  Output out;
  out.format = "json";
  app.add_option("--tol", tol, "numerical tolerance")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--out", out.path, "write the report to a file instead of stdout");
  app.add_option("--format", out.format, "json | csv | pretty")->capture_default_str();

  // subspace
  auto* sub = app.add_subcommand("subspace", "standard subspace computations");
  sub->fallthrough();
  sub->require_subcommand(1);
  std::string sub_input;
  for (const char* mode : {"check", "modular", "complement"}) {
    auto* c = sub->add_subcommand(mode);
    c->fallthrough();
    c->add_option("--input", sub_input, "subspace JSON file")->required();
  }

  // lorentz
  auto* lor = app.add_subcommand("lorentz", "Lorentz group computations");
  auto* cover = lor->add_subcommand("cover", "covering map SL(2,C) -> Lorentz");
  cover->fallthrough();
  std::string cover_input;
  int cover_boost = 0, cover_rot = 0;
  double cover_param = 0.0;
  cover->add_option("--input", cover_input, "SL(2,C) matrix JSON file");
  cover->add_option("--boost", cover_boost, "boost axis 1..3");
  cover->add_option("--rotation", cover_rot, "rotation axis 1..3");
  cover->add_option("--param", cover_param, "boost rapidity / rotation angle");

  // orbit
  auto* orbit = app.add_subcommand("orbit", "mass shell computations");
  auto* reflect = orbit->add_subcommand("reflect", "reflection decomposition");
  reflect->fallthrough();
  double orbit_mass = 1.0;
  std::string orbit_p = "0,0,0";
  reflect->add_option("--mass", orbit_mass, "mass m >= 0")->required();
  reflect->add_option("--p", orbit_p, "spatial momentum \"p1,p2,p3\"")->required();

  // mc
  auto* mc = app.add_subcommand("mc", "modularity condition check");
  std::string mc_model, mc_cert;
  mc->add_option("--model", mc_model, "orbit model JSON file")->required();
  mc->add_option("--certificate", mc_cert, "certificate output path");

  // spin
  auto* spin = app.add_subcommand("spin", "SU(2) decompositions");
  auto* dec = spin->add_subcommand("decompose", "truncated restriction decomposition");
  dec->fallthrough();
  int spin_n = 0, spin_cutoff = 5;
  double spin_s = 0.0, spin_mass = 1.0;
  dec->add_option("--n", spin_n, "little-group label n >= 0")->required();
  dec->add_option("--s", spin_s, "spin s (half-integers allowed)")->required();
  dec->add_option("--cutoff", spin_cutoff, "truncation N")->required();
  dec->add_option("--mass", spin_mass, "mass label for the records");

  // net
  auto* net = app.add_subcommand("net", "covariant net verification");
  auto* verify = net->add_subcommand("verify", "axiom checks");
  verify->fallthrough();
  std::string net_spec, net_checks;
  verify->add_option("--spec", net_spec, "net spec JSON file")->required();
  verify->add_option("--checks", net_checks, "comma list: bw,duality,borchers,locality,...");
  auto* demo = net->add_subcommand("demo-counterexample", "two-action tensor demonstrator");
  demo->fallthrough();
  double demo_omega = 0.5, demo_t = 1.0;
  demo->add_option("--omega", demo_omega, "rotation rate of the V block")->required();
  demo->add_option("--t", demo_t, "probe parameter for the Z map");

  // split
  auto* split = app.add_subcommand("split", "modular spectrum diagnostics");
  auto* trace = split->add_subcommand("trace", "trace of Delta restricted to [0,1]");
  trace->fallthrough();
  std::string split_spectrum;
  trace->add_option("--spectrum", split_spectrum, "spectrum JSON file")->required();
  auto* growth = split->add_subcommand("growth", "trace growth under mass refinement");
  growth->fallthrough();
  std::string split_surrogate;
  int split_max_n = 32;
  growth->add_option("--surrogate", split_surrogate, "surrogate family JSON file")->required();
  growth->add_option("--max-refinement", split_max_n, "largest mass-grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sub->parsed()) {
      for (const char* mode : {"check", "modular", "complement"}) {
        if (sub->get_subcommand(mode)->parsed()) return cmd_subspace(mode, sub_input, tol, out);
      }
    }
    if (cover->parsed())
      return cmd_lorentz_cover(cover_input, cover_boost, cover_rot, cover_param, tol, out);
    if (reflect->parsed()) return cmd_orbit_reflect(orbit_mass, orbit_p, tol, out);
    if (mc->parsed()) return cmd_mc(mc_model, tol, mc_cert, out);
    if (dec->parsed()) return cmd_spin_decompose(spin_n, spin_s, spin_cutoff, spin_mass, out);
    if (verify->parsed()) return cmd_net_verify(net_spec, net_checks, tol, out);
    if (demo->parsed()) return cmd_net_demo(demo_omega, demo_t, tol, out);
    if (trace->parsed()) return cmd_split_trace(split_spectrum, out);
    if (growth->parsed()) return cmd_split_growth(split_surrogate, split_max_n, out);
    throw ssw::IoError("no command selected");
  } catch (const ssw::IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ssw::Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
