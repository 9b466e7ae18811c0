#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ssw/io.hpp"

using namespace ssw;

TEST_CASE("matrix json round trip") {
  ComplexMatrix m(2, 2);
  m << Complex(1, 2), Complex(0, -1), Complex(3.5, 0), Complex(-2, 0.25);
  Json j = matrix_to_json(m, true);
  CHECK(matrix_json_is_antilinear(j));
  ComplexMatrix back = matrix_from_json(j);
  CHECK((back - m).norm() == 0.0);
}

TEST_CASE("subspace json round trip") {
  ComplexMatrix b(2, 2);
  b << Complex(1, 0), Complex(0, 1), Complex(0, 0), Complex(1, 0);
  Json j = subspace_to_json(b);
  CHECK((subspace_basis_from_json(j) - b).norm() == 0.0);
}

TEST_CASE("unknown keys are rejected") {
  Json j = matrix_to_json(ComplexMatrix::Identity(2, 2));
  j["extra"] = 1;
  CHECK_THROWS_AS(matrix_from_json(j), IoError);

  Json model;
  model["masses"] = {1.0};
  model["orbits"] = Json::array({Json{{"r", 1.0}, {"angle_N", 2}, {"rapidity_N", 3}}});
  model["unexpected"] = true;
  CHECK_THROWS_AS(model_spec_from_json(model), IoError);
}

TEST_CASE("model spec round trip") {
  OrbitModelSpec spec;
  spec.masses = {1.0, 2.0};
  spec.multiplicities = {1, 2};
  spec.orbits = {{1.0, 4, 7}};
  spec.rapidity_step = 2.5;
  spec.elements = {ElementSpec::boost_step(), ElementSpec::rotation_step(),
                   ElementSpec::reflection(), ElementSpec::translate(FourVector(1, 0, 0, 0))};
  Json j = model_spec_to_json(spec);
  OrbitModelSpec back = model_spec_from_json(j);
  CHECK(back.masses == spec.masses);
  CHECK(back.multiplicities == spec.multiplicities);
  REQUIRE(back.orbits.size() == 1);
  CHECK(back.orbits[0].angle_count == 4);
  CHECK(back.orbits[0].rapidity_count == 7);
  CHECK(back.rapidity_step == doctest::Approx(2.5));
  REQUIRE(back.elements.size() == 4);
  CHECK(back.elements[3].kind == ElementKind::Translation);
  CHECK(back.elements[3].translation[0] == doctest::Approx(1.0));
}

TEST_CASE("spectrum and surrogate parsing") {
  Json s;
  s["eigenvalues"] = {2.0, 0.5};
  ModularSpectrum ms = spectrum_from_json(s);
  CHECK(ms.eigenvalues.size() == 2);

  Json fam;
  fam["mode"] = "atomic";
  fam["atoms"] = Json::array({Json{{"mass", 1.0}, {"weight", 2},
                                   {"generator", Json{{"ratio", 0.5}, {"depth", 3}}}}});
  SurrogateFamily f = surrogate_from_json(fam);
  CHECK(f.mode == "atomic");
  REQUIRE(f.atoms.size() == 1);
  CHECK(f.atoms[0].weight == 2);
  CHECK(f.atoms[0].depth == 3);

  Json bad;
  bad["mode"] = "atomic";
  CHECK_THROWS_AS(surrogate_from_json(bad), IoError);
}

TEST_CASE("malformed files raise io errors") {
  const char* path = "ssw_io_test_malformed.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(load_json_file(path), IoError);
  std::remove(path);
  CHECK_THROWS_AS(load_json_file("definitely_missing_file.json"), IoError);
}
