#pragma once

// JSON file schemas shared by the library and the CLI. Complex entries are
// [re, im] pairs; matrices are row-major under a "dim"/"entries" header;
// unknown keys are rejected everywhere.

#include <string>
#include <vector>

#include <json.hpp>

#include "ssw/momentum.hpp"
#include "ssw/split.hpp"
#include "ssw/subspace.hpp"

namespace ssw {

using Json = nlohmann::ordered_json;

// Malformed input (schema violations, unreadable files): CLI exit code 2, as
// opposed to ssw::Error (a failed mathematical precondition): exit code 1.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

void check_keys(const Json& j, const std::vector<std::string>& allowed,
                const std::string& context);

// {"dim": n, "entries": [[re, im], ...] row-major, "antilinear": bool?}
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m, bool antilinear = false);
bool matrix_json_is_antilinear(const Json& j);

// {"dim": n, "basis": [[[re,im], ...], ...]}
ComplexMatrix subspace_basis_from_json(const Json& j);
Json subspace_to_json(const ComplexMatrix& basis);

// {"masses": [...], "multiplicities": [...], "orbits": [{"r":, "angle_N":,
//  "rapidity_N":}], "rapidity_step": s?, "elements": [...]} where elements are
// "boost_step" | "rotation_step" | "reflection" | "two_pi" |
// {"translation": [a0,a1,a2,a3]}
OrbitModelSpec model_spec_from_json(const Json& j);
Json model_spec_to_json(const OrbitModelSpec& spec);

// {"eigenvalues": [...]}
ModularSpectrum spectrum_from_json(const Json& j);
Json spectrum_to_json(const ModularSpectrum& s);

// growth family: {"mode": "continuum"|"atomic", "mass_lo":, "mass_hi":,
//  "generator": {"ratio":, "depth":, "weight":}, "atoms": [{"mass":, "weight":,
//  "ratio":, "depth":}, ...]}
SurrogateFamily surrogate_from_json(const Json& j);

// plain list form for compose_masses: [{"mass":, "weight":, "generator":
//  {"ratio":, "depth":}}, ...]
std::vector<MassPointSurrogate> mass_points_from_json(const Json& j);

}  // namespace ssw
