#include "hp/polarized.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hp::polarized {

using diamonds::HodgeDiamond;
using diamonds::HodgeNumbers;

std::vector<std::pair<int, HodgeNumbers>> derived_domains(const HodgeDiamond& d) {
  auto prim = diamonds::primitive_decomposition(d);
  std::vector<std::pair<int, HodgeNumbers>> out;
  for (auto& [k, layer] : prim.by_k) {
    HodgeNumbers hk;
    hk.weight = d.weight + k;
    hk.h.assign(hk.weight + 1, 0);
    for (auto& [pq, j] : layer) hk.h[pq.first] = j;
    out.push_back({k, hk});
  }
  // decreasing k: the deepest strings constrain the sum the most
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first > b.first; });
  return out;
}

namespace {

// Dense target grid for the pruned sum search.
struct Target {
  int n;
  std::vector<int> cells;  // (n+1)x(n+1)

  explicit Target(const HodgeDiamond& d) : n(d.weight), cells((n + 1) * (n + 1), 0) {
    for (auto& [pq, v] : d.entries) cells[pq.first * (n + 1) + pq.second] = v;
  }
  int& at(int p, int q) { return cells[p * (n + 1) + q]; }

  // subtract the [a,a]-shifts of a weight n+k diamond; false if it does not fit
  bool subtract(const HodgeDiamond& dk, int k) {
    for (auto& [pq, v] : dk.entries)
      for (int a = 0; a <= k; ++a) {
        int p = pq.first - a, q = pq.second - a;
        if (p < 0 || p > n || q < 0 || q > n) return false;
        int& cell = at(p, q);
        cell -= v;
        if (cell < 0) return false;
      }
    return true;
  }
  bool empty() const {
    return std::all_of(cells.begin(), cells.end(), [](int c) { return c == 0; });
  }
};

bool search(size_t idx, const std::vector<std::pair<int, std::vector<HodgeDiamond>>>& layers,
            Target& target, Budget& budget) {
  budget.charge();
  if (idx == layers.size()) return target.empty();
  const auto& [k, candidates] = layers[idx];
  for (const auto& dk : candidates) {
    Target saved = target;
    if (target.subtract(dk, k)) {
      if (search(idx + 1, layers, target, budget)) return true;
    }
    target = saved;
  }
  return false;
}

}  // namespace

bool is_polarized(const HodgeDiamond& d1, const HodgeDiamond& d2, const HodgeNumbers& h, Budget* budget) {
  if (!diamonds::check_diamond(d1, h) || !diamonds::check_diamond(d2, h))
    throw InvariantError("is_polarized: invalid diamond for the given hodge numbers");
  Budget local;
  Budget& b = budget ? *budget : local;

  std::vector<std::pair<int, std::vector<HodgeDiamond>>> layers;
  for (auto& [k, hk] : derived_domains(d1)) layers.push_back({k, diamonds::enumerate_diamonds(hk, &b)});

  Target target(d2);
  return search(0, layers, target, b);
}

RelationSet polarized_digraph(const HodgeNumbers& h, Budget* budget) {
  auto ds = diamonds::enumerate_diamonds(h, budget);
  RelationSet r;
  r.classes = diamonds::class_names(h, ds);
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = 0; j < ds.size(); ++j) {
      if (i == j) continue;
      if (is_polarized(ds[i], ds[j], h, budget)) r.edges.insert({(int)i, (int)j});
    }
  for (auto& [i, j] : r.edges)
    if (r.edges.count({j, i})) throw InvariantError("polarized_digraph: antisymmetry violated");

  // keep an edge only when no stored path of length >= 2 connects its ends
  for (auto& [i, j] : r.edges) {
    bool redundant = false;
    for (size_t m = 0; m < ds.size() && !redundant; ++m)
      if ((int)m != i && (int)m != j && r.has(i, (int)m) && r.has((int)m, j)) redundant = true;
    if (!redundant) r.generating.insert({i, j});
  }
  return r;
}

std::vector<std::array<int, 3>> transitivity_report(const RelationSet& r) {
  std::vector<std::array<int, 3>> out;
  for (auto& [a, b] : r.edges)
    for (auto& [b2, c] : r.edges) {
      if (b2 != b || c == a) continue;
      if (!r.has(a, c)) out.push_back({a, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const RelationSet& r, const std::set<std::pair<int, int>>& dashed_extra) {
  std::ostringstream os;
  os << "digraph relations {\n  rankdir=LR;\n";
  for (size_t i = 0; i < r.classes.size(); ++i)
    os << "  n" << i << " [label=\"" << r.classes[i] << "\"];\n";
  for (auto& [i, j] : r.generating) os << "  n" << i << " -> n" << j << ";\n";
  for (auto& [i, j] : dashed_extra)
    if (!r.has(i, j)) os << "  n" << i << " -> n" << j << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hp::polarized
