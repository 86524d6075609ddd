#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hp/g2model.hpp"

using namespace hp;
using namespace hp::g2model;

namespace {

BinaryCubic C(Rat a0, Rat a1, Rat a2, Rat a3) {
  BinaryCubic v;
  v.a = {a0, a1, a2, a3};
  return v;
}

GL2Element mul(const GL2Element& g, const GL2Element& h) {
  return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

struct RatGen {
  std::mt19937 rng{20240615};
  Rat small() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return Rat(num(rng), den(rng));
  }
  GL2Element positive_det() {
    while (true) {
      GL2Element g{small(), small(), small(), small()};
      if (g.det() > Rat(0)) return g;
    }
  }
  BinaryCubic cubic() { return C(small(), small(), small(), small()); }
};

}  // namespace

TEST_CASE("cube of a linear form transforms by the symmetric cube") {
  RatGen gen;
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen.positive_det();
    auto img = act(g, C(Rat(1), Rat(0), Rat(0), Rat(0)));
    CHECK(img.a[0] == g.a * g.a * g.a);
    CHECK(img.a[1] == Rat(3) * g.a * g.a * g.b);
    CHECK(img.a[2] == Rat(3) * g.a * g.b * g.b);
    CHECK(img.a[3] == g.b * g.b * g.b);
  }
  CHECK_THROWS_AS(act(GL2Element{Rat(1), Rat(0), Rat(0), Rat(-1)}, C(Rat(1), Rat(0), Rat(0), Rat(0))),
                  InvariantError);
}

TEST_CASE("identity and composition") {
  RatGen gen;
  GL2Element id{Rat(1), Rat(0), Rat(0), Rat(1)};
  for (int trial = 0; trial < 200; ++trial) {
    auto v = gen.cubic();
    CHECK(act(id, v) == v);
    auto g = gen.positive_det(), h = gen.positive_det();
    // substitution acts contravariantly
    CHECK(act(g, act(h, v)) == act(mul(h, g), v));
  }
}

TEST_CASE("surface membership") {
  CHECK(on_closure_surface(C(Rat(0), Rat(0), Rat(1), Rat(0))));
  CHECK(on_closure_surface(C(Rat(1), Rat(0), Rat(0), Rat(0))));
  CHECK(on_closure_surface(C(Rat(-1, 3), Rat(0), Rat(1), Rat(2, 3))));
  // pushing off along the repeated-root direction leaves the surface
  for (Rat r : {Rat(1), Rat(1, 2), Rat(3)}) {
    auto v = C(Rat(-1, 3), Rat(0), Rat(1) + r, Rat(2, 3));
    CHECK_FALSE(on_closure_surface(v));
    CHECK(surface_defect(v) == Rat(4) * (Rat(1) + r) * (Rat(1) + r) * (Rat(1) + r) - Rat(4));
  }
}

TEST_CASE("commutation pairing") {
  // against the cube family: only the degenerate member commutes
  RatGen gen;
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen.positive_det();
    auto w = act(g, C(Rat(1), Rat(0), Rat(0), Rat(0)));
    CHECK(commutes(C(Rat(1), Rat(0), Rat(0), Rat(0)), w) == (g.b == Rat(0)));
  }
  CHECK(commutes(C(Rat(0), Rat(0), Rat(1), Rat(0)), C(Rat(-1, 3), Rat(0), Rat(1), Rat(2, 3))));
  auto v = gen.cubic();
  CHECK(commutes(v, v));
  auto w2 = gen.cubic();
  CHECK(commutes(v, w2) == commutes(w2, v));
}

TEST_CASE("orbit classification") {
  CHECK(classify(C(Rat(0), Rat(0), Rat(0), Rat(0))) == OrbitType::Zero);
  CHECK(classify(C(Rat(1), Rat(0), Rat(0), Rat(0))) == OrbitType::I);
  CHECK(classify(C(Rat(0), Rat(0), Rat(1), Rat(0))) == OrbitType::II);
  CHECK(classify(C(Rat(1), Rat(0), Rat(1), Rat(0))) == OrbitType::III);
  CHECK(classify(C(Rat(1), Rat(3), Rat(3), Rat(1))) == OrbitType::I);  // (x+y)^3
}

TEST_CASE("classification is constant on orbits") {
  RatGen gen;
  int checked = 0;
  std::vector<BinaryCubic> seeds = {C(Rat(1), Rat(0), Rat(0), Rat(0)), C(Rat(0), Rat(0), Rat(1), Rat(0)),
                                    C(Rat(1), Rat(0), Rat(1), Rat(0)), C(Rat(1), Rat(1), Rat(0), Rat(0))};
  while (checked < 1200) {
    for (auto& v : seeds) {
      auto g = gen.positive_det();
      CHECK(classify(act(g, v)) == classify(v));
      CHECK(on_closure_surface(act(g, v)) == on_closure_surface(v));
      ++checked;
    }
    auto v = gen.cubic();
    auto g = gen.positive_det();
    CHECK(classify(act(g, v)) == classify(v));
    ++checked;
  }
}

TEST_CASE("perfect cubes stay inside the closure surface") {
  RatGen gen;
  for (int trial = 0; trial < 100; ++trial) {
    auto w = act(gen.positive_det(), C(Rat(1), Rat(0), Rat(0), Rat(0)));
    CHECK(classify(w) == OrbitType::I);
    CHECK(on_closure_surface(w));
  }
}

TEST_CASE("the one-parameter family of repeated-root partners") {
  for (Rat t : {Rat(-1), Rat(-2), Rat(-1, 2), Rat(-3, 5), Rat(1), Rat(2, 3)}) {
    auto n2 = family_n2(t);
    CHECK(classify(n2) == OrbitType::II);
    CHECK(commutes(C(Rat(0), Rat(0), Rat(1), Rat(0)), n2));
    if (t < Rat(0)) {
      // realized inside the positive-determinant orbit
      GL2Element g{Rat(1), Rat(-2) * t, Rat(-1), -t};
      CHECK(g.det() > Rat(0));
      CHECK(act(g, C(Rat(0), Rat(0), Rat(1), Rat(0))) == n2);
      // the combined cone is generic
      BinaryCubic sum = C(Rat(0), Rat(0), Rat(1), Rat(0));
      for (int i = 0; i < 4; ++i) sum.a[i] += n2.a[i];
      CHECK(classify(sum) == OrbitType::III);
    }
  }
  CHECK(classify(family_n2(Rat(0))) == OrbitType::I);  // degenerates to the cube x^3
}

TEST_CASE("strong 2-cube verdicts") {
  auto ii = strong_2cube_verdict(OrbitType::I, OrbitType::I);
  CHECK_FALSE(ii.verdict);
  CHECK_FALSE(ii.witness.has_value());

  auto i_ii = strong_2cube_verdict(OrbitType::I, OrbitType::II);
  CHECK(i_ii.verdict);
  REQUIRE(i_ii.witness.has_value());
  CHECK(commutes(i_ii.witness->first, i_ii.witness->second));

  auto ii_i = strong_2cube_verdict(OrbitType::II, OrbitType::I);
  CHECK(ii_i.verdict);

  auto ii_ii = strong_2cube_verdict(OrbitType::II, OrbitType::II);
  CHECK(ii_ii.verdict);
  REQUIRE(ii_ii.witness.has_value());
  auto [v, w] = *ii_ii.witness;
  CHECK(v == C(Rat(0), Rat(0), Rat(1), Rat(0)));
  CHECK(w == C(Rat(-1, 3), Rat(0), Rat(1), Rat(2, 3)));
  // spot-check the positive span on rational samples
  for (Rat r1 : {Rat(1), Rat(1, 3), Rat(5)})
    for (Rat r2 : {Rat(1), Rat(2, 7), Rat(4)}) {
      BinaryCubic s;
      for (int i = 0; i < 4; ++i) s.a[i] = r1 * v.a[i] + r2 * w.a[i];
      CHECK(classify(s) == OrbitType::III);
    }

  CHECK_THROWS_AS(strong_2cube_verdict(OrbitType::III, OrbitType::I), InvariantError);
}

TEST_CASE("positivity certificates") {
  RatPoly p({Rat(0), Rat(12), Rat(12), Rat(4)});  // 4(1+r)^3 - 4
  CHECK(p.certified_positive_on_positive_axis());
  RatPoly mixed({Rat(0), Rat(-1), Rat(2)});
  CHECK_FALSE(mixed.certified_positive_on_positive_axis());
  CHECK(RatPoly({Rat(1)}).certified_positive_on_positive_axis());
  CHECK_FALSE(RatPoly().certified_positive_on_positive_axis());
}
