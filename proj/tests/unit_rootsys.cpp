#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hp/rootsys.hpp"

using namespace hp;
using namespace hp::rootsys;

TEST_CASE("positive root sets") {
  auto g2 = RootSystem::build("G2");
  std::set<Root> expect{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  CHECK(std::set<Root>(g2.positive_roots().begin(), g2.positive_roots().end()) == expect);

  CHECK(RootSystem::build("A1").positive_roots().size() == 1);
  CHECK(RootSystem::build("A3").positive_roots().size() == 6);
  CHECK(RootSystem::build("B3").positive_roots().size() == 9);
  CHECK(RootSystem::build("C4").positive_roots().size() == 16);
  CHECK(RootSystem::build("D4").positive_roots().size() == 12);
  CHECK(RootSystem::build("F4").positive_roots().size() == 24);
  CHECK(RootSystem::build("E6").positive_roots().size() == 36);
  CHECK_THROWS_AS(RootSystem::build("H3"), ConfigError);
  CHECK_THROWS_AS(RootSystem::build("A9"), ConfigError);
}

TEST_CASE("root membership and sums") {
  auto g2 = RootSystem::build("G2");
  CHECK_FALSE(g2.is_root({2, 2}));          // a2 + (2a1+a2)
  CHECK(g2.is_root({3, 2}));                // (a1+a2) + (2a1+a2)
  CHECK_FALSE(g2.is_root({0, 0}));
  CHECK(g2.is_root({-3, -1}));
}

TEST_CASE("strong orthogonality") {
  auto g2 = RootSystem::build("G2");
  CHECK(g2.strongly_orthogonal({0, 1}, {2, 1}));
  CHECK_FALSE(g2.strongly_orthogonal({1, 0}, {0, 1}));
  CHECK_FALSE(g2.strongly_orthogonal({0, 1}, {0, 1}));    // same sl(2)
  CHECK_FALSE(g2.strongly_orthogonal({0, 1}, {0, -1}));   // same sl(2)
  auto c4 = RootSystem::build("C4");
  CHECK(c4.strongly_orthogonal({1, 0, 0, 0}, {0, 0, 1, 0}));
  CHECK_FALSE(c4.strongly_orthogonal({0, 0, 1, 0}, {0, 0, 0, 1}));
}

TEST_CASE("weyl group orders and closure") {
  CHECK(RootSystem::build("A1").weyl_group().size() == 2);
  auto g2 = RootSystem::build("G2");
  auto w = g2.weyl_group();
  CHECK(w.size() == 12);
  // permutations in the closure really act on the root list
  for (auto& perm : w) {
    std::set<int> image(perm.begin(), perm.end());
    CHECK(image.size() == g2.all_roots().size());
  }
  CHECK(RootSystem::build("D4").weyl_group().size() == 192);
  CHECK(RootSystem::build("C4").weyl_group().size() == 384);
  CHECK_THROWS_AS(RootSystem::build("D4").weyl_group(10), BudgetError);
}

TEST_CASE("levi subsystems by span closure") {
  auto g2 = RootSystem::build("G2");
  auto ls = g2.levi_subsystems();
  CHECK(ls.size() == 8);  // empty + six rank-one spans + everything
  int by_size[3] = {0, 0, 0};
  for (auto& l : ls) {
    if (l.roots.empty())
      ++by_size[0];
    else if (l.roots.size() == 2)
      ++by_size[1];
    else if (l.roots.size() == 12)
      ++by_size[2];
    // span closure is idempotent
    CHECK(g2.span_closure(l.roots).roots == l.roots);
    CHECK(l.simpleRoots.size() <= 2);
  }
  CHECK(by_size[0] == 1);
  CHECK(by_size[1] == 6);
  CHECK(by_size[2] == 1);

  auto d4 = RootSystem::build("D4");
  auto ld = d4.levi_subsystems();
  for (auto& l : ld) CHECK(d4.span_closure(l.roots).roots == l.roots);
  CHECK(std::set<LeviSubsystem>(ld.begin(), ld.end()).size() == ld.size());
}

TEST_CASE("coroots agree with the cartan matrix rows") {
  for (auto spec : {"A3", "B3", "C4", "D4", "F4", "G2"}) {
    auto rs = RootSystem::build(spec);
    for (int i = 0; i < rs.rank(); ++i) {
      auto h = rs.coroot(rs.simple_root(i));
      for (int j = 0; j < rs.rank(); ++j) CHECK(h.coords[j] == Rat(rs.cartan()[i][j]));
    }
  }
}

TEST_CASE("semisimple projection fixtures") {
  auto g2 = RootSystem::build("G2");
  GradingVector s2{{Rat(0), Rat(1)}};

  auto a2 = g2.span_closure({{0, 1}});
  CHECK(g2.semisimple_projection(a2, s2).coords == RatVec{Rat(-1), Rat(2)});

  auto short_a1 = g2.span_closure({{2, 1}});
  CHECK(g2.semisimple_projection(short_a1, s2).coords == RatVec{Rat(1), Rat(0)});

  GradingVector s12{{Rat(1), Rat(1)}};
  CHECK(g2.semisimple_projection(g2.full_subsystem(), s12).coords == RatVec{Rat(2), Rat(2)});

  auto d4 = RootSystem::build("D4");
  GradingVector e{{Rat(0), Rat(1), Rat(0), Rat(0)}};
  auto a1 = d4.span_closure({{0, 1, 0, 0}});
  CHECK(d4.semisimple_projection(a1, e).coords == RatVec{Rat(-1), Rat(2), Rat(-1), Rat(-1)});

  // empty subsystem projects to zero
  CHECK(g2.semisimple_projection(LeviSubsystem{}, s2).coords == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("projection pairs like the doubled grading on the subsystem") {
  for (auto spec : {"G2", "C4", "D4"}) {
    auto rs = RootSystem::build(spec);
    GradingVector e;
    e.coords.assign(rs.rank(), Rat(1));
    for (auto& l : rs.levi_subsystems()) {
      auto z = rs.semisimple_projection(l, e);
      for (auto& a : l.roots) CHECK(pair_root(a, z) == Rat(2) * pair_root(a, e));
    }
  }
}

TEST_CASE("distinguished grading tests") {
  auto g2 = RootSystem::build("G2");
  GradingVector s2{{Rat(0), Rat(1)}};

  auto cls_i = g2.span_closure({{0, 1}});
  CHECK(g2.is_distinguished(cls_i, g2.semisimple_projection(cls_i, s2)));

  GradingVector s12{{Rat(1), Rat(1)}};
  auto full = g2.full_subsystem();
  CHECK(g2.is_distinguished(full, g2.semisimple_projection(full, s12)));

  // the long-highest-root sl(2) pairs to 4, not 2
  auto high = g2.span_closure({{3, 2}});
  CHECK_FALSE(g2.is_distinguished(high, g2.semisimple_projection(high, s2)));

  CHECK(g2.is_distinguished(LeviSubsystem{}, GradingVector{{Rat(0), Rat(0)}}));

  GradingVector off{{Rat(0), Rat(1, 2)}};
  CHECK_THROWS_AS(g2.is_distinguished(cls_i, off), InvariantError);

  // any rank-one subsystem with pairing exactly 2 passes
  auto c4 = RootSystem::build("C4");
  auto a1 = c4.span_closure({{1, 0, 0, 0}});
  CHECK(c4.is_distinguished(a1, c4.coroot({1, 0, 0, 0})));
}

TEST_CASE("fundamental weights have positive coefficients") {
  for (auto spec : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "E6", "F4", "G2"}) {
    auto rs = RootSystem::build(spec);
    auto w = rs.fundamental_weights();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) CHECK(w[i][j] > Rat(0));
  }
}

TEST_CASE("reflections map the root set to itself") {
  auto f4 = RootSystem::build("F4");
  for (int i = 0; i < 4; ++i) {
    auto perm = f4.reflection_perm(f4.simple_root(i));
    for (size_t k = 0; k < perm.size(); ++k) CHECK(perm[perm[k]] == (int)k);  // involution
  }
  auto g2 = RootSystem::build("G2");
  // s1 sends a2 to a2 + 3 a1
  auto p = g2.reflection_perm(g2.simple_root(0));
  CHECK(g2.all_roots()[p[g2.root_index({0, 1})]] == Root{3, 1});
}
