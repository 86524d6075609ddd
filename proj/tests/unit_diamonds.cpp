#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "hp/diamonds.hpp"

using namespace hp;
using diamonds::HodgeDiamond;
using diamonds::HodgeNumbers;

namespace {

HodgeNumbers H(std::vector<int> h) {
  HodgeNumbers out;
  out.weight = static_cast<int>(h.size()) - 1;
  out.h = std::move(h);
  return out;
}

HodgeDiamond D(int n, std::initializer_list<std::tuple<int, int, int>> cells) {
  HodgeDiamond d;
  d.weight = n;
  for (auto& [p, q, v] : cells)
    if (v > 0) d.entries[{p, q}] += v;
  return d;
}

// Independent oracle: realize the diamond by explicit Jordan strings and
// compute the rank of each power by rational elimination.
std::vector<int> rank_profile_by_matrix(const HodgeDiamond& d) {
  auto prim = diamonds::primitive_decomposition(d);
  std::vector<int> lengths;
  for (auto& [k, layer] : prim.by_k)
    for (int s = 0; s < prim.string_count(k); ++s) lengths.push_back(k + 1);
  int dim = std::accumulate(lengths.begin(), lengths.end(), 0);
  std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
  int off = 0;
  for (int len : lengths) {
    for (int i = 1; i < len; ++i) m[off + i][off + i - 1] = 1;
    off += len;
  }
  auto rank = [&](std::vector<std::vector<long long>> a) {
    int r = 0;
    long long prev = 1;
    for (int c = 0; c < dim && r < dim; ++c) {
      int piv = r;
      while (piv < dim && a[piv][c] == 0) ++piv;
      if (piv == dim) continue;
      std::swap(a[piv], a[r]);
      for (int rr = r + 1; rr < dim; ++rr) {
        for (int cc = c + 1; cc < dim; ++cc)
          a[rr][cc] = (a[r][c] * a[rr][cc] - a[rr][c] * a[r][cc]) / prev;
        a[rr][c] = 0;
      }
      prev = a[r][c];
      ++r;
    }
    return r;
  };
  // straightforward power-and-rank
  std::vector<int> profile;
  std::vector<std::vector<long long>> power = m;
  for (int l = 1; l <= std::max(d.weight, 1); ++l) {
    if (l > 1) {
      std::vector<std::vector<long long>> next(dim, std::vector<long long>(dim, 0));
      for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
          if (power[i][k] != 0)
            for (int j = 0; j < dim; ++j) next[i][j] += power[i][k] * m[k][j];
      power = std::move(next);
    }
    profile.push_back(rank(power));
  }
  return profile;
}

}  // namespace

TEST_CASE("class counts across the bundled families") {
  for (int g : {1, 2, 3, 5}) CHECK(diamonds::enumerate_diamonds(H({g, g})).size() == size_t(g + 1));
  CHECK(diamonds::enumerate_diamonds(H({1, 1, 1})).size() == 2);  // no middle degeneration
  for (int m : {2, 3, 4, 5}) CHECK(diamonds::enumerate_diamonds(H({1, m, 1})).size() == 3);
  for (int m : {4, 5}) CHECK(diamonds::enumerate_diamonds(H({2, m, 2})).size() == 6);
  for (int m : {2, 3, 4}) CHECK(diamonds::enumerate_diamonds(H({1, m, m, 1})).size() == size_t(4 * m));
  CHECK(diamonds::enumerate_diamonds(H({1, 1, 1, 1, 1, 1, 1, 1})).size() == 16);
}

TEST_CASE("check_diamond on hand examples") {
  CHECK(diamonds::check_diamond(D(1, {{1, 0, 2}, {0, 1, 2}}), H({2, 2})));
  // missing symmetry partner
  HodgeDiamond bad = D(2, {{0, 0, 1}, {1, 1, 2}});
  CHECK_FALSE(diamonds::check_diamond(bad, H({1, 3, 1})));
  // weight-3 class with one extra-long string pair
  auto i1 = diamonds::named_diamond(H({1, 2, 2, 1}), "I_1");
  REQUIRE(i1.has_value());
  CHECK(diamonds::check_diamond(*i1, H({1, 2, 2, 1})));
  // wrong weight is rejected outright
  CHECK_FALSE(diamonds::check_diamond(D(1, {{1, 0, 2}, {0, 1, 2}}), H({2, 0, 2})));
}

TEST_CASE("enumeration is sorted, duplicate free, valid, dimension preserving") {
  for (auto h : {H({3, 3}), H({1, 4, 1}), H({2, 4, 2}), H({1, 3, 3, 1}), H({1, 1, 1, 1, 1, 1, 1, 1})}) {
    auto ds = diamonds::enumerate_diamonds(h);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    std::set<HodgeDiamond> uniq(ds.begin(), ds.end());
    CHECK(uniq.size() == ds.size());
    for (auto& d : ds) {
      CHECK(diamonds::check_diamond(d, h));
      CHECK(d.total() == h.dim());
    }
    CHECK(std::find(ds.begin(), ds.end(), diamonds::pure_diamond(h)) != ds.end());
  }
}

TEST_CASE("primitive decomposition fixtures") {
  SUBCASE("weight-1 classes") {
    int g = 4;
    for (int a = 0; a <= g; ++a) {
      auto d = D(1, {{1, 0, g - a}, {0, 1, g - a}, {1, 1, a}, {0, 0, a}});
      auto prim = diamonds::primitive_decomposition(d);
      if (a < g) {
        CHECK(prim.by_k.at(0).at({1, 0}) == g - a);
        CHECK(prim.by_k.at(0).at({0, 1}) == g - a);
      }
      if (a > 0) CHECK(prim.by_k.at(1).at({1, 1}) == a);
      CHECK(prim.string_count(0) == 2 * (g - a));
      CHECK(prim.string_count(1) == a);
    }
  }
  SUBCASE("(2,m,2) type I splits into a weight-2 and a weight-3 part") {
    int m = 5;
    auto d = *diamonds::named_diamond(H({2, m, 2}), "I");
    auto prim = diamonds::primitive_decomposition(d);
    CHECK(prim.by_k.at(0) ==
          std::map<std::pair<int, int>, int>{{{2, 0}, 1}, {{1, 1}, m - 2}, {{0, 2}, 1}});
    CHECK(prim.by_k.at(1) == std::map<std::pair<int, int>, int>{{{2, 1}, 1}, {{1, 2}, 1}});
  }
  SUBCASE("pure classes are their own primitive part") {
    auto h = H({1, 3, 3, 1});
    auto prim = diamonds::primitive_decomposition(diamonds::pure_diamond(h));
    CHECK(prim.by_k.size() == 1);
    CHECK(prim.by_k.count(0) == 1);
  }
  SUBCASE("violated monotonicity is flagged") {
    HodgeDiamond broken = D(2, {{0, 0, 2}, {1, 1, 1}, {2, 2, 2}});
    CHECK_THROWS_AS(diamonds::primitive_decomposition(broken), InvariantError);
  }
}

TEST_CASE("reconstruct inverts the decomposition on every enumerated class") {
  size_t covered = 0;
  for (auto h : {H({1, 1}), H({2, 2}), H({3, 3}), H({5, 5}), H({1, 2, 1}), H({1, 3, 1}), H({1, 4, 1}),
                 H({1, 5, 1}), H({2, 4, 2}), H({2, 5, 2}), H({1, 2, 2, 1}), H({1, 3, 3, 1}),
                 H({1, 4, 4, 1}), H({1, 1, 1, 1, 1, 1, 1, 1})}) {
    for (auto& d : diamonds::enumerate_diamonds(h)) {
      CHECK(diamonds::reconstruct(diamonds::primitive_decomposition(d)) == d);
      ++covered;
    }
  }
  CHECK(covered >= 60);
}

TEST_CASE("reconstruct builds the middle weight-2 class from its parts") {
  int m = 4;
  diamonds::PrimitiveSubDiamond prim;
  prim.weight = 2;
  prim.by_k[0][{1, 1}] = m - 1;
  prim.by_k[2][{2, 2}] = 1;
  auto d = diamonds::reconstruct(prim);
  CHECK(diamonds::check_diamond(d, H({1, m, 1})));
  CHECK(d == *diamonds::named_diamond(H({1, m, 1}), "II"));

  diamonds::PrimitiveSubDiamond empty;
  empty.weight = 2;
  CHECK(diamonds::reconstruct(empty).entries.empty());

  diamonds::PrimitiveSubDiamond asym;
  asym.weight = 2;
  asym.by_k[1][{2, 1}] = 1;
  CHECK_THROWS_AS(diamonds::reconstruct(asym), InvariantError);
}

TEST_CASE("rank profiles: fixtures and the explicit-matrix oracle") {
  auto h = H({1, 2, 2, 1});
  CHECK(diamonds::rank_profile(*diamonds::named_diamond(h, "III_0")) == std::vector<int>{4, 2, 0});
  CHECK(diamonds::rank_profile(*diamonds::named_diamond(h, "I_1")) == std::vector<int>{1, 0, 0});
  CHECK(diamonds::rank_profile(diamonds::pure_diamond(h)) == std::vector<int>{0, 0, 0});

  for (auto hh : {H({2, 2}), H({1, 3, 1}), H({2, 4, 2}), H({1, 2, 2, 1}), H({1, 3, 3, 1})})
    for (auto& d : diamonds::enumerate_diamonds(hh))
      CHECK(diamonds::rank_profile(d) == rank_profile_by_matrix(d));
}

TEST_CASE("distinct classes have distinct primitive parts") {
  for (auto h : {H({1, 4, 1}), H({2, 4, 2}), H({1, 3, 3, 1})}) {
    auto ds = diamonds::enumerate_diamonds(h);
    std::set<std::string> prims;
    for (auto& d : ds) prims.insert(diamonds::reconstruct(diamonds::primitive_decomposition(d)).to_string());
    CHECK(prims.size() == ds.size());
  }
}

TEST_CASE("bundled names") {
  auto h = H({1, 2, 2, 1});
  auto ds = diamonds::enumerate_diamonds(h);
  auto names = diamonds::class_names(h, ds);
  std::set<std::string> got(names.begin(), names.end());
  CHECK(got == std::set<std::string>{"I_0", "I_1", "I_2", "II_0", "II_1", "III_0", "IV_1", "IV_2"});

  auto k3m1 = H({1, 1, 1});
  auto names1 = diamonds::class_names(k3m1, diamonds::enumerate_diamonds(k3m1));
  CHECK(std::set<std::string>(names1.begin(), names1.end()) == std::set<std::string>{"0", "II"});

  auto hb = H({1, 1, 1, 1, 1, 1, 1, 1});
  auto nb = diamonds::class_names(hb, diamonds::enumerate_diamonds(hb));
  CHECK(std::count(nb.begin(), nb.end(), "{a1,a3}") == 1);
  CHECK(std::count(nb.begin(), nb.end(), "{}") == 1);

  // families without tables fall back to positional names
  auto other = H({2, 2, 2});
  auto no = diamonds::class_names(other, diamonds::enumerate_diamonds(other));
  CHECK(no[0] == "D0");
}

TEST_CASE("budget cuts off oversized searches") {
  Budget tiny(10);
  CHECK_THROWS_AS(diamonds::enumerate_diamonds(H({1, 4, 4, 1}), &tiny), BudgetError);
}

TEST_CASE("invalid hodge numbers are rejected") {
  CHECK_THROWS_AS(H({1, 2}).validate(), ConfigError);
  CHECK_THROWS_AS(H({0, 0}).validate(), ConfigError);
  CHECK_THROWS_AS(H({-1, -1}).validate(), ConfigError);
}
