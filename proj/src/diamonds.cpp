#include "hp/diamonds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hp::diamonds {

int HodgeNumbers::dim() const { return std::accumulate(h.begin(), h.end(), 0); }

void HodgeNumbers::validate() const {
  if (weight < 0) throw ConfigError("negative weight");
  if (static_cast<int>(h.size()) != weight + 1)
    throw ConfigError("hodge number vector must have weight+1 entries");
  for (int p = 0; p <= weight; ++p) {
    if (h[p] < 0) throw ConfigError("negative hodge number");
    if (h[p] != h[weight - p]) throw ConfigError("hodge numbers must satisfy h^{p} = h^{n-p}");
  }
  if (dim() < 1) throw ConfigError("total dimension must be at least 1");
}

int HodgeDiamond::at(int p, int q) const {
  auto it = entries.find({p, q});
  return it == entries.end() ? 0 : it->second;
}

int HodgeDiamond::total() const {
  int t = 0;
  for (auto& [pq, v] : entries) t += v;
  return t;
}

bool HodgeDiamond::operator<(const HodgeDiamond& o) const {
  for (int p = 0; p <= weight; ++p)
    for (int q = 0; q <= weight; ++q) {
      int a = at(p, q), b = o.at(p, q);
      if (a != b) return a < b;
    }
  return false;
}

std::string HodgeDiamond::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [pq, v] : entries) {
    if (!first) os << ",";
    first = false;
    os << "(" << pq.first << "," << pq.second << "):" << v;
  }
  os << "}";
  return os.str();
}

int PrimitiveSubDiamond::string_count(int k) const {
  auto it = by_k.find(k);
  if (it == by_k.end()) return 0;
  int m = 0;
  for (auto& [pq, j] : it->second) m += j;
  return m;
}

bool check_diamond(const HodgeDiamond& d, const HodgeNumbers& h) {
  if (d.weight != h.weight) return false;
  const int n = h.weight;
  for (auto& [pq, v] : d.entries) {
    if (v <= 0) return false;
    if (pq.first < 0 || pq.first > n || pq.second < 0 || pq.second > n) return false;
  }
  // column sums
  for (int p = 0; p <= n; ++p) {
    int sum = 0;
    for (int q = 0; q <= n; ++q) sum += d.at(p, q);
    if (sum != h.h[p]) return false;
  }
  // symmetry i^{p,q} = i^{q,p} = i^{n-q,n-p}
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (d.at(p, q) != d.at(q, p)) return false;
      if (d.at(p, q) != d.at(n - q, n - p)) return false;
    }
  // monotone toward the diagonal
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if (p + q <= n && d.at(p - 1, q - 1) > d.at(p, q)) return false;
  return true;
}

namespace {

// Orbit of a cell under the diamond symmetries.
std::pair<int, int> canonical_cell(int n, int p, int q) {
  std::pair<int, int> best{p, q};
  const std::pair<int, int> orbit[4] = {{p, q}, {q, p}, {n - q, n - p}, {n - p, n - q}};
  for (auto& c : orbit) best = std::min(best, c);
  return best;
}

struct Enumerator {
  const HodgeNumbers& h;
  int n;
  Budget* budget;
  std::vector<std::vector<int>> grid;   // (n+1)x(n+1), -1 = unassigned
  std::vector<int> colsum;
  std::vector<HodgeDiamond> out;

  Enumerator(const HodgeNumbers& hh, Budget* b)
      : h(hh), n(hh.weight), budget(b), grid(n + 1, std::vector<int>(n + 1, -1)), colsum(n + 1, 0) {}

  void emit() {
    HodgeDiamond d;
    d.weight = n;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        if (grid[p][q] > 0) d.entries[{p, q}] = grid[p][q];
    out.push_back(std::move(d));
  }

  bool admissible(int p, int q, int v) {
    if (colsum[p] + v > h.h[p]) return false;
    if (p + q <= n && p > 0 && q > 0 && grid[p - 1][q - 1] > v) return false;
    // reflected monotonicity: i^{p,q} >= i^{p+1,q+1} when p+q >= n; the
    // mirror cell was assigned earlier whenever (p+1,q+1) precedes (p,q)
    // lexicographically, which never happens, so nothing to do here.
    return true;
  }

  void place(int p, int q, int v, bool forward) {
    grid[p][q] = forward ? v : -1;
    colsum[p] += forward ? v : -v;
  }

  void rec(int idx) {
    if (budget) budget->charge();
    if (idx == (n + 1) * (n + 1)) {
      emit();
      return;
    }
    const int p = idx / (n + 1), q = idx % (n + 1);
    auto canon = canonical_cell(n, p, q);
    if (canon != std::make_pair(p, q)) {
      // forced by an earlier cell
      int v = grid[canon.first][canon.second];
      if (!admissible(p, q, v)) return;
      place(p, q, v, true);
      if (column_ok(p, q)) rec(idx + 1);
      place(p, q, v, false);
      return;
    }
    for (int v = 0; v <= h.h[p] - colsum[p]; ++v) {
      if (!admissible(p, q, v)) continue;
      place(p, q, v, true);
      if (column_ok(p, q)) rec(idx + 1);
      place(p, q, v, false);
    }
  }

  // once a column is complete its sum must match exactly
  bool column_ok(int p, int q) { return q < n || colsum[p] == h.h[p]; }
};

}  // namespace

std::vector<HodgeDiamond> enumerate_diamonds(const HodgeNumbers& h, Budget* budget) {
  h.validate();
  Budget local;
  Enumerator e(h, budget ? budget : &local);
  e.rec(0);
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

HodgeDiamond pure_diamond(const HodgeNumbers& h) {
  HodgeDiamond d;
  d.weight = h.weight;
  for (int p = 0; p <= h.weight; ++p)
    if (h.h[p] > 0) d.entries[{p, h.weight - p}] = h.h[p];
  return d;
}

PrimitiveSubDiamond primitive_decomposition(const HodgeDiamond& d) {
  PrimitiveSubDiamond out;
  out.weight = d.weight;
  const int n = d.weight;
  for (auto& [pq, v] : d.entries) {
    auto [p, q] = pq;
    if (p + q < n) continue;
    int j = v - d.at(p + 1, q + 1);
    if (j < 0) throw InvariantError("primitive_decomposition: entries increase away from the diagonal");
    if (j > 0) out.by_k[p + q - n][{p, q}] = j;
  }
  // entries strictly below the diagonal must be mirrors of the upper part
  for (auto& [pq, v] : d.entries) {
    auto [p, q] = pq;
    if (p + q >= n) continue;
    if (v != d.at(n - q, n - p)) throw InvariantError("primitive_decomposition: broken reflection symmetry");
  }
  return out;
}

HodgeDiamond reconstruct(const PrimitiveSubDiamond& prim) {
  for (auto& [k, layer] : prim.by_k)
    for (auto& [pq, j] : layer) {
      auto it = layer.find({pq.second, pq.first});
      if (it == layer.end() || it->second != j)
        throw InvariantError("reconstruct: conjugation symmetry j^{p,q} = j^{q,p} violated");
    }
  HodgeDiamond d;
  d.weight = prim.weight;
  for (auto& [k, layer] : prim.by_k)
    for (auto& [pq, j] : layer)
      for (int a = 0; a <= k; ++a) d.entries[{pq.first - a, pq.second - a}] += j;
  std::erase_if(d.entries, [](const auto& kv) { return kv.second == 0; });
  return d;
}

std::vector<int> rank_profile(const HodgeDiamond& d) {
  auto prim = primitive_decomposition(d);
  const int n = d.weight;
  std::vector<int> profile;
  for (int l = 1; l <= std::max(n, 1); ++l) {
    int rk = 0;
    for (auto& [k, layer] : prim.by_k)
      if (k >= l) rk += (k + 1 - l) * prim.string_count(k);
    profile.push_back(rk);
  }
  return profile;
}

namespace {

enum class Family { Curves, K3, Horikawa, CY, Borel7, Other };

Family detect_family(const HodgeNumbers& h) {
  const auto& v = h.h;
  if (h.weight == 1 && v.size() == 2 && v[0] == v[1] && v[0] >= 1) return Family::Curves;
  if (h.weight == 2 && v.size() == 3 && v[0] == 1 && v[2] == 1 && v[1] >= 1) return Family::K3;
  if (h.weight == 2 && v.size() == 3 && v[0] == 2 && v[2] == 2 && v[1] >= 4) return Family::Horikawa;
  if (h.weight == 3 && v.size() == 4 && v[0] == 1 && v[3] == 1 && v[1] >= 1 && v[1] == v[2]) return Family::CY;
  if (h.weight == 7 && v.size() == 8 && std::all_of(v.begin(), v.end(), [](int x) { return x == 1; }))
    return Family::Borel7;
  return Family::Other;
}

HodgeDiamond make(int n, std::initializer_list<std::tuple<int, int, int>> cells) {
  HodgeDiamond d;
  d.weight = n;
  for (auto& [p, q, v] : cells)
    if (v > 0) d.entries[{p, q}] += v;
  return d;
}

// The bundled family tables: name -> diamond.
std::vector<std::pair<std::string, HodgeDiamond>> family_table(const HodgeNumbers& h) {
  std::vector<std::pair<std::string, HodgeDiamond>> table;
  const auto& v = h.h;
  switch (detect_family(h)) {
    case Family::Curves: {
      int g = v[0];
      for (int a = 0; a <= g; ++a)
        table.push_back({"I_" + std::to_string(a),
                         make(1, {{1, 0, g - a}, {0, 1, g - a}, {1, 1, a}, {0, 0, a}})});
      break;
    }
    case Family::K3: {
      int m = v[1];
      table.push_back({"0", make(2, {{0, 2, 1}, {1, 1, m}, {2, 0, 1}})});
      if (m >= 2)
        table.push_back({"I", make(2, {{0, 1, 1}, {1, 0, 1}, {1, 1, m - 2}, {1, 2, 1}, {2, 1, 1}})});
      table.push_back({"II", make(2, {{0, 0, 1}, {1, 1, m}, {2, 2, 1}})});
      break;
    }
    case Family::Horikawa: {
      int m = v[1];
      table.push_back({"0", make(2, {{0, 2, 2}, {1, 1, m}, {2, 0, 2}})});
      table.push_back({"I", make(2, {{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 1, m - 2}, {1, 2, 1}, {2, 0, 1}, {2, 1, 1}})});
      table.push_back({"II", make(2, {{0, 0, 1}, {0, 2, 1}, {1, 1, m}, {2, 0, 1}, {2, 2, 1}})});
      table.push_back({"III", make(2, {{0, 1, 2}, {1, 0, 2}, {1, 1, m - 4}, {1, 2, 2}, {2, 1, 2}})});
      table.push_back({"IV", make(2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, m - 2}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}})});
      table.push_back({"V", make(2, {{0, 0, 2}, {1, 1, m}, {2, 2, 2}})});
      break;
    }
    case Family::CY: {
      int m = v[1];
      for (int a = 0; a <= m; ++a)
        table.push_back({"I_" + std::to_string(a),
                         make(3, {{0, 3, 1}, {3, 0, 1}, {1, 2, m - a}, {2, 1, m - a}, {1, 1, a}, {2, 2, a}})});
      for (int b = 0; b <= m - 1; ++b)
        table.push_back({"II_" + std::to_string(b),
                         make(3, {{0, 2, 1}, {2, 0, 1}, {1, 3, 1}, {3, 1, 1}, {1, 1, b}, {2, 2, b},
                                  {1, 2, m - 1 - b}, {2, 1, m - 1 - b}})});
      for (int c = 0; c <= m - 2; ++c)
        table.push_back({"III_" + std::to_string(c),
                         make(3, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}, {1, 1, c}, {2, 2, c},
                                  {1, 2, m - 1 - c}, {2, 1, m - 1 - c}})});
      for (int dd = 1; dd <= m; ++dd)
        table.push_back({"IV_" + std::to_string(dd),
                         make(3, {{0, 0, 1}, {3, 3, 1}, {1, 1, dd}, {2, 2, dd}, {1, 2, m - dd}, {2, 1, m - dd}})});
      break;
    }
    case Family::Borel7: {
      // diamond of a subset S' of the four simple roots: each string of
      // length 2 pairs up neighbouring antidiagonal cells
      struct Row {
        const char* name;
        int qs[8];  // q-value of the single entry in column p
      };
      static const Row rows[] = {
          {"{}", {7, 6, 5, 4, 3, 2, 1, 0}},
          {"{a1}", {6, 7, 5, 4, 3, 2, 0, 1}},
          {"{a2}", {7, 5, 6, 4, 3, 1, 2, 0}},
          {"{a3}", {7, 6, 4, 5, 2, 3, 1, 0}},
          {"{a4}", {7, 6, 5, 3, 4, 2, 1, 0}},
          {"{a1,a2}", {5, 6, 7, 4, 3, 0, 1, 2}},
          {"{a1,a3}", {6, 7, 4, 5, 2, 3, 0, 1}},
          {"{a1,a4}", {6, 7, 5, 3, 4, 2, 0, 1}},
          {"{a2,a3}", {7, 4, 5, 6, 1, 2, 3, 0}},
          {"{a2,a4}", {7, 5, 6, 3, 4, 1, 2, 0}},
          {"{a3,a4}", {7, 6, 2, 3, 4, 5, 1, 0}},
          {"{a1,a2,a3}", {4, 5, 6, 7, 0, 1, 2, 3}},
          {"{a1,a2,a4}", {5, 6, 7, 3, 4, 0, 1, 2}},
          {"{a1,a3,a4}", {6, 7, 2, 3, 4, 5, 0, 1}},
          {"{a2,a3,a4}", {7, 1, 2, 3, 4, 5, 6, 0}},
          {"{a1,a2,a3,a4}", {0, 1, 2, 3, 4, 5, 6, 7}},
      };
      for (auto& r : rows) {
        HodgeDiamond d;
        d.weight = 7;
        for (int p = 0; p < 8; ++p) d.entries[{p, r.qs[p]}] = 1;
        table.push_back({r.name, d});
      }
      break;
    }
    case Family::Other:
      break;
  }
  return table;
}

}  // namespace

std::vector<std::string> class_names(const HodgeNumbers& h, const std::vector<HodgeDiamond>& ds) {
  auto table = family_table(h);
  std::vector<std::string> names(ds.size());
  for (size_t i = 0; i < ds.size(); ++i) {
    std::string name;
    for (auto& [n, d] : table)
      if (d == ds[i]) {
        name = n;
        break;
      }
    if (name.empty() && !table.empty())
      throw FixtureError("enumerated diamond not covered by the bundled name table: " + ds[i].to_string());
    names[i] = name.empty() ? "D" + std::to_string(i) : name;
  }
  return names;
}

std::optional<HodgeDiamond> named_diamond(const HodgeNumbers& h, const std::string& name) {
  for (auto& [n, d] : family_table(h))
    if (n == name) return d;
  return std::nullopt;
}

}  // namespace hp::diamonds
