#include "hp/mirror.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hp::mirror {

namespace {
std::array<int, 3> key(int a, int b, int c) {
  std::array<int, 3> k{a, b, c};
  std::sort(k.begin(), k.end());
  return k;
}
}  // namespace

Rat IntersectionData::c(int a, int b, int cidx) const {
  auto it = triple.find(key(a, b, cidx));
  return it == triple.end() ? Rat(0) : it->second;
}

void IntersectionData::set(int a, int b, int cidx, const Rat& v) { triple[key(a, b, cidx)] = v; }

IntersectionData IntersectionData::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open triple file '" + path + "'");
  IntersectionData data;
  data.r = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int a, b, c;
    std::string val;
    if (!(ls >> a >> b >> c >> val)) throw ConfigError("bad triple line: '" + line + "'");
    data.set(a, b, c, parse_rational(val));
    data.r = std::max({data.r, a + 2, b + 2, c + 2});
  }
  if (data.r < 2) throw ConfigError("triple file defines no divisor classes");
  return data;
}

IntersectionData IntersectionData::cy_fixture() {
  IntersectionData data;
  data.r = 3;
  data.set(0, 0, 0, Rat(9));
  data.set(0, 0, 1, Rat(3));
  data.set(0, 1, 1, Rat(1));
  data.set(1, 1, 1, Rat(0));
  return data;
}

RatMat build_Nj(const IntersectionData& data, int j) {
  const int g = data.r - 1;  // number of divisor generators
  if (j < 0 || j >= g) throw ConfigError("divisor index out of range");
  const int dim = 2 * data.r;
  const int J0 = 1, C0 = 1 + g, P = 1 + 2 * g;
  RatMat n(dim, RatVec(dim, Rat(0)));
  for (int k = 0; k < g; ++k) {
    n[J0 + k][0] = (k == j) ? Rat(-1) : Rat(0);
    n[C0 + k][0] = -data.c(j, j, k) / Rat(2);
    for (int l = 0; l < g; ++l) n[C0 + k][J0 + l] = -data.c(j, k, l);
  }
  n[P][0] = -data.c(j, j, j) / Rat(3);
  for (int l = 0; l < g; ++l) n[P][J0 + l] = -data.c(j, j, l) / Rat(2);
  n[P][C0 + j] = Rat(-1);
  return n;
}

RatMat pairing_matrix(int r) {
  const int g = r - 1, dim = 2 * r, J0 = 1, C0 = 1 + g, P = 1 + 2 * g;
  RatMat q(dim, RatVec(dim, Rat(0)));
  q[0][P] = Rat(1);
  q[P][0] = Rat(-1);
  for (int k = 0; k < g; ++k) {
    q[J0 + k][C0 + k] = Rat(1);
    q[C0 + k][J0 + k] = Rat(-1);
  }
  return q;
}

std::array<int, 3> rank_profile_matrix(const RatMat& m) {
  RatMat m2 = mat_mul(m, m);
  RatMat m3 = mat_mul(m2, m);
  RatMat m4 = mat_mul(m3, m);
  if (!is_zero(m4)) throw InvariantError("rank_profile_matrix: input is not nilpotent of order <= 4");
  return {rank_bareiss(m), rank_bareiss(m2), rank_bareiss(m3)};
}

std::string classify_type(const std::array<int, 3>& profile, const diamonds::HodgeNumbers& h) {
  auto ds = diamonds::enumerate_diamonds(h);
  auto names = diamonds::class_names(h, ds);
  std::vector<std::string> hits;
  for (size_t i = 0; i < ds.size(); ++i) {
    auto rp = diamonds::rank_profile(ds[i]);
    rp.resize(3, 0);
    if (rp[0] == profile[0] && rp[1] == profile[1] && rp[2] == profile[2]) hits.push_back(names[i]);
  }
  if (hits.empty()) throw InvariantError("no class carries the given rank profile");
  if (hits.size() > 1) {
    std::string msg = "rank profile does not determine the class; candidates:";
    for (auto& n : hits) msg += " " + n;
    throw InvariantError(msg);
  }
  return hits[0];
}

}  // namespace hp::mirror
