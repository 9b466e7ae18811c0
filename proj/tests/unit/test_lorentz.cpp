#include <doctest.h>

#include "ssw/lorentz.hpp"
#include "support/oracles.hpp"

using namespace ssw;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("boost lift covers the hyperbolic rotation of the (x0, x3) plane") {
  for (double t : {0.3, 1.0, -2.0}) {
    LorentzMatrix l = covering_map(sl2_boost(3, t));
    FourVector e0 = l.apply(FourVector(1, 0, 0, 0));
    CHECK(e0[0] == doctest::Approx(std::cosh(t)).epsilon(1e-13));
    CHECK(e0[3] == doctest::Approx(std::sinh(t)).epsilon(1e-13));
    CHECK(std::abs(e0[1]) + std::abs(e0[2]) < 1e-13);
    CHECK((l.m - lorentz_boost(3, t).m).norm() < 1e-12);
  }
}

TEST_CASE("pi rotation about axis 3 flips the transverse plane, and r(2 pi) is trivial") {
  LorentzMatrix l = covering_map(sl2_rotation(3, kPi));
  FourVector x = l.apply(FourVector(0.3, 1.0, 2.0, -0.7));
  CHECK(x[0] == doctest::Approx(0.3));
  CHECK(x[1] == doctest::Approx(-1.0));
  CHECK(x[2] == doctest::Approx(-2.0));
  CHECK(x[3] == doctest::Approx(-0.7));

  CHECK((covering_map(sl2_two_pi_rotation()).m - Matrix4d::Identity()).norm() < 1e-14);
  // kernel of the covering: -A and A have one image
  SL2Element a = sl2_boost(1, 0.8) * sl2_rotation(2, 0.4);
  CHECK((covering_map(a).m - covering_map(-a).m).norm() < 1e-13);
}

TEST_CASE("rotation matrices agree with the exponential of the generator") {
  for (int axis : {1, 2, 3}) {
    for (double theta : {0.2, 1.3, -2.2}) {
      Matrix2c gen = Complex(0, 0.5 * theta) * pauli(axis);
      ComplexMatrix expd = oracle::expm_taylor(gen);
      CHECK((sl2_rotation(axis, theta).m - expd).norm() < 1e-13);
      ComplexMatrix expb = oracle::expm_taylor(ComplexMatrix(0.5 * theta * pauli(axis)));
      CHECK((sl2_boost(axis, theta).m - expb).norm() < 1e-13);
    }
  }
}

TEST_CASE("the reflection relation r1(pi) lambda3(t) r1(pi)^{-1} = lambda3(-t)") {
  SL2Element r = sl2_rotation(1, kPi);
  for (int k = 0; k < 50; ++k) {
    double t = -3.0 + 6.0 * k / 49.0;
    SL2Element lhs = r * sl2_boost(3, t) * r.inverse();
    CHECK((lhs.m - sl2_boost(3, -t).m).norm() <= 1e-12 * std::max(1.0, lhs.m.norm()));
  }
}

TEST_CASE("covering map is a homomorphism with metric-preserving image") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    SL2Element a = random_sl2(rng);
    SL2Element b = random_sl2(rng);
    LorentzMatrix la = covering_map(a), lb = covering_map(b), lab = covering_map(a * b);
    CHECK((lab.m - (la * lb).m).norm() <= 1e-10 * std::max(1.0, lab.m.norm()));
    CHECK(la.metric_defect() <= 1e-12 * std::max(1.0, la.m.squaredNorm()));
    CHECK(la.is_proper_orthochronous(1e-7));
  }
}

TEST_CASE("boost and rotation subgroups satisfy the one-parameter laws") {
  FourVector origin(1, 0, 0, 0);
  FourVector moved = lorentz_boost(1, 0.9).apply(origin);
  CHECK(moved[0] == doctest::Approx(std::cosh(0.9)));
  CHECK(moved[1] == doctest::Approx(std::sinh(0.9)));

  LorentzMatrix rot = lorentz_rotation(3, 0.77);
  FourVector fixed = rot.apply(FourVector(2.0, 0, 0, 5.0));
  CHECK(fixed[0] == doctest::Approx(2.0));
  CHECK(fixed[3] == doctest::Approx(5.0));

  CHECK((lorentz_boost(3, 2.0).m * lorentz_boost(3, -2.0).m - Matrix4d::Identity()).norm() <=
        1e-12);
  CHECK(((sl2_boost(2, 0.4) * sl2_boost(2, 0.35)).m - sl2_boost(2, 0.75).m).norm() <= 1e-13);
}

TEST_CASE("sl2 lift inverts the covering map up to sign") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    SL2Element a = random_sl2(rng);
    LorentzMatrix l = covering_map(a);
    SL2Element lift = sl2_lift(l);
    double match = std::min((lift.m - a.m).norm(), (lift.m + a.m).norm());
    CHECK(match <= 1e-8 * std::max(1.0, a.m.norm()));
  }
}

TEST_CASE("sl2 lift covers every quaternion extraction branch") {
  // pi rotations about each axis drive the trace of the 3x3 block negative
  for (int axis : {1, 2, 3}) {
    for (double theta : {kPi, kPi - 1e-9, -kPi + 1e-9, kPi / 2, 2 * kPi - 1e-9}) {
      SL2Element a = sl2_rotation(axis, theta);
      SL2Element lift = sl2_lift(covering_map(a));
      double m = std::min((lift.m - a.m).norm(), (lift.m + a.m).norm());
      CHECK(m <= 1e-7);
    }
    SL2Element mixed = sl2_boost(axis % 3 + 1, 1.2) * sl2_rotation(axis, kPi);
    SL2Element lift = sl2_lift(covering_map(mixed));
    double m = std::min((lift.m - mixed.m).norm(), (lift.m + mixed.m).norm());
    CHECK(m <= 1e-7);
  }
}

TEST_CASE("wedge membership and complement") {
  Wedge w1 = Wedge::axis(1);
  CHECK(w1.contains(FourVector(0, 1, 5, -7)));
  CHECK(!w1.contains(FourVector(2, 1, 0, 0)));

  Wedge w1p = causal_complement(w1);
  CHECK(w1p.contains(FourVector(0, -1, 3, 2)));
  CHECK(!w1p.contains(FourVector(0, 1, 0, 0)));
  CHECK(wedge_equal(causal_complement(w1p), w1));

  // complement commutes with the group action
  LorentzMatrix g = lorentz_rotation(2, 0.7) * lorentz_boost(1, 0.4);
  CHECK(wedge_equal(causal_complement(transform(g, w1)), transform(g, causal_complement(w1))));
}

TEST_CASE("wedge normal form decides equality and inclusion") {
  Wedge w3 = Wedge::axis(3);
  LorentzMatrix boost3 = lorentz_boost(3, 1.3);
  CHECK(wedge_equal(transform(boost3, w3), w3, 1e-10));
  LorentzMatrix rot3 = lorentz_rotation(3, 0.5);
  CHECK(wedge_equal(transform(rot3, w3), w3, 1e-10));
  CHECK(!wedge_equal(transform(lorentz_rotation(1, 0.3), w3), w3, 1e-6));

  // translated wedge along the edge-positive lightlike direction shrinks
  PoincareMap shift{LorentzMatrix(), FourVector(0.5, 0, 0, 0.5)};
  Wedge smaller = transform(shift, w3);
  CHECK(wedge_included(smaller, w3));
  CHECK(!wedge_included(w3, smaller));
  CHECK(!wedge_included(w3, causal_complement(w3)));
  CHECK(wedge_included(w3, w3));
}

TEST_CASE("fixing boost preserves the wedge") {
  std::mt19937_64 rng(47);
  Wedge w = transform(covering_map(random_sl2(rng)), Wedge::axis(2));
  PoincareMap fix = fixing_boost(w, 1.1);
  std::uniform_real_distribution<double> uni(-2, 2);
  int inside = 0;
  for (int k = 0; k < 200; ++k) {
    FourVector x(uni(rng), uni(rng), uni(rng), uni(rng));
    if (!w.contains(x)) continue;
    ++inside;
    CHECK(w.contains(fix.apply(x)));
  }
  CHECK(inside > 10);

  // the fixing boost of the base wedge is the closed-form boost
  PoincareMap base = fixing_boost(Wedge::axis(1), 0.8);
  CHECK((base.lorentz.m - lorentz_boost(1, 0.8).m).norm() < 1e-12);
  CHECK(base.translation.eigen().norm() < 1e-12);
}

TEST_CASE("reflection elements map the wedge to its complement") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> uni(-3, 3);
  for (const Wedge& w : {Wedge::axis(3), transform(covering_map(random_sl2(rng)), Wedge::axis(1))}) {
    auto [r, rminus] = reflection_elements(w);
    CHECK((rminus.m + r.m).norm() < 1e-13);
    LorentzMatrix lr = covering_map(r);
    Wedge target = causal_complement(w);
    int hits = 0;
    for (int k = 0; k < 100; ++k) {
      FourVector x(uni(rng), uni(rng), uni(rng), uni(rng));
      if (!w.contains(x)) continue;
      ++hits;
      CHECK(target.contains(lr.apply(x)));
    }
    CHECK(hits > 5);
  }
  // for the axis-3 wedge the element is r_1(pi)
  auto [r3, r3m] = reflection_elements(Wedge::axis(3));
  double match = std::min((r3.m - sl2_rotation(1, kPi).m).norm(),
                          (r3.m + sl2_rotation(1, kPi).m).norm());
  CHECK(match < 1e-12);
}

TEST_CASE("wedge stabilizer generators fix the wedge") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> uni(-3, 3);
  Wedge w3 = Wedge::axis(3);
  WedgeStabilizer stab = wedge_stabilizer(w3);
  std::vector<LorentzMatrix> gens = {covering_map(stab.boost(0.7)),
                                     covering_map(stab.rotation(1.0)),
                                     covering_map(stab.two_pi())};
  for (const auto& g : gens) {
    CHECK(wedge_equal(transform(g, w3), w3, 1e-9));
    for (int k = 0; k < 100; ++k) {
      FourVector x(uni(rng), uni(rng), uni(rng), uni(rng));
      if (!w3.contains(x)) continue;
      CHECK(w3.contains(g.apply(x)));
    }
  }
  CHECK(stab.translation_directions().size() == 4);

  // conjugation consistency for a moved wedge
  SL2Element u = random_sl2(rng);
  Wedge moved = transform(covering_map(u), w3);
  WedgeStabilizer mstab = wedge_stabilizer(moved);
  SL2Element direct = mstab.boost(0.9);
  SL2Element conjug = u * stab.boost(0.9) * u.inverse();
  double match = std::min((direct.m - conjug.m).norm(), (direct.m + conjug.m).norm());
  CHECK(match <= 1e-7 * std::max(1.0, conjug.m.norm()));
  CHECK(wedge_equal(transform(covering_map(mstab.rotation(0.4)), moved), moved, 1e-8));
}
