#include "hp/cubes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hp/g2model.hpp"

namespace hp::cubes {

using psid::DomainSpec;
using psid::LeviClass;
using rootsys::Root;

int capacity(const DomainSpec& spec, const LeviClass& c) {
  auto dl = psid::diagonal_levi(spec, c);
  std::vector<Root> layer;
  for (const auto& a : dl.roots)
    if (pair_root(a, spec.e) == Rat(-1)) layer.push_back(a);

  const int m = static_cast<int>(layer.size());
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Root sum(spec.rs.rank());
      for (int k = 0; k < spec.rs.rank(); ++k) sum[k] = layer[i][k] + layer[j][k];
      compatible[i][j] = !spec.rs.is_root(sum);
    }

  // exact max clique by branch and bound on <= ~30 vertices
  int best = 0;
  std::vector<int> clique;
  auto rec = [&](auto&& self, std::vector<int> cand) -> void {
    best = std::max(best, static_cast<int>(clique.size()));
    if (clique.size() + cand.size() <= static_cast<size_t>(best)) return;
    while (!cand.empty()) {
      int v = cand.back();
      cand.pop_back();
      if (clique.size() + cand.size() + 1 <= static_cast<size_t>(best)) return;
      std::vector<int> next;
      for (int u : cand)
        if (compatible[v][u]) next.push_back(u);
      clique.push_back(v);
      self(self, std::move(next));
      clique.pop_back();
    }
  };
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  rec(rec, all);
  return best;
}

bool NCube::operator<(const NCube& o) const {
  if (n != o.n) return n < o.n;
  return values < o.values;
}

std::string NCube::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  if (n == 0) return "<" + names[values[0]] + ">";
  if (n == 1) return "<" + names[values[1]] + ">1";
  if (n == 2) return "<" + names[values[1]] + "|" + names[values[3]] + "|" + names[values[2]] + ">";
  os << "{";
  for (int eps = 0; eps < (1 << n); ++eps) {
    if (eps) os << ",";
    for (int i = 0; i < n; ++i) os << ((eps >> i) & 1);
    os << ":" << names[values[eps]];
  }
  os << "}";
  return os.str();
}

namespace {

int permute_mask(int eps, const std::vector<int>& perm) {
  int out = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    if ((eps >> i) & 1) out |= 1 << perm[i];
  return out;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

NCube canonical_form(const NCube& c) {
  NCube best = c;
  for (const auto& perm : all_perms(c.n)) {
    NCube img;
    img.n = c.n;
    img.values.resize(c.values.size());
    for (int eps = 0; eps < (int)c.values.size(); ++eps) img.values[permute_mask(eps, perm)] = c.values[eps];
    if (img.values < best.values) best = img;
  }
  return best;
}

std::vector<NCube> enumerate_admissible(const ClassData& data, int n, Budget* budget) {
  const int cells = 1 << n;
  std::set<NCube> seen;
  NCube cur;
  cur.n = n;
  cur.values.assign(cells, data.trivial);

  auto rel = [&](int a, int b) { return a == b || data.polarized.count({a, b}) > 0; };

  // cells in order of popcount so all lower faces are assigned first
  std::vector<int> order;
  for (int pc = 1; pc <= n; ++pc)
    for (int eps = 1; eps < cells; ++eps)
      if (std::popcount((unsigned)eps) == pc) order.push_back(eps);

  Budget local;
  Budget& b = budget ? *budget : local;
  auto rec = [&](auto&& self, size_t idx) -> void {
    b.charge();
    if (idx == order.size()) {
      seen.insert(canonical_form(cur));
      return;
    }
    int eps = order[idx];
    int pc = std::popcount((unsigned)eps);
    for (int v = 0; v < (int)data.names.size(); ++v) {
      if (v == data.trivial) continue;           // only the origin is trivial
      if (pc > data.caps[v]) continue;           // capacity bound
      bool ok = true;
      for (int sub = (eps - 1) & eps; ok; sub = (sub - 1) & eps) {
        if (sub != 0 && !rel(cur.values[sub], v)) ok = false;
        if (sub == 0) break;
      }
      if (!ok) continue;
      cur.values[eps] = v;
      self(self, idx + 1);
      cur.values[eps] = data.trivial;
    }
  };
  if (n == 0) {
    return {cur};
  }
  rec(rec, 0);
  return {seen.begin(), seen.end()};
}

bool cube_leq(const NCube& small, const NCube& big) {
  if (small.n > big.n) return false;
  NCube canon_small = canonical_form(small);

  // choose which axes of the big cube survive
  std::vector<int> axes(small.n);
  std::vector<bool> chosen(big.n, false);
  auto rec = [&](auto&& self, int pos, int from) -> bool {
    if (pos == small.n) {
      NCube pulled;
      pulled.n = small.n;
      pulled.values.resize(1 << small.n);
      for (int eps = 0; eps < (1 << small.n); ++eps) {
        int big_eps = 0;
        for (int i = 0; i < small.n; ++i)
          if ((eps >> i) & 1) big_eps |= 1 << axes[i];
        pulled.values[eps] = big.values[big_eps];
      }
      // the restriction must not pick up the trivial class off the origin
      for (int eps = 1; eps < (1 << small.n); ++eps)
        if (pulled.values[eps] == big.values[0]) return false;
      return canonical_form(pulled) == canon_small;
    }
    for (int a = from; a < big.n; ++a) {
      axes[pos] = a;
      if (self(self, pos + 1, a + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

SecondaryPoset secondary_poset(const ClassData& data, int maxN,
                               const std::function<bool(const NCube&)>* keep, Budget* budget) {
  SecondaryPoset out;
  for (int n = 0; n <= maxN; ++n)
    for (auto& c : enumerate_admissible(data, n, budget)) {
      if (keep && *keep && !(*keep)(c)) continue;
      out.cubes.push_back(c);
    }
  std::sort(out.cubes.begin(), out.cubes.end());

  std::set<std::pair<int, int>> full;
  for (size_t i = 0; i < out.cubes.size(); ++i)
    for (size_t j = 0; j < out.cubes.size(); ++j) {
      if (i == j || out.cubes[i].n >= out.cubes[j].n) continue;
      if (cube_leq(out.cubes[i], out.cubes[j])) full.insert({(int)i, (int)j});
    }
  for (auto& [i, j] : full) {
    bool redundant = false;
    for (size_t m = 0; m < out.cubes.size() && !redundant; ++m)
      if (full.count({i, (int)m}) && full.count({(int)m, j})) redundant = true;
    if (!redundant) out.hasse.insert({i, j});
  }
  return out;
}

std::string to_dot(const SecondaryPoset& poset, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "digraph secondary {\n  rankdir=LR;\n";
  for (size_t i = 0; i < poset.cubes.size(); ++i)
    os << "  c" << i << " [label=\"" << poset.cubes[i].to_string(names) << "\"];\n";
  for (auto& [i, j] : poset.hasse) os << "  c" << i << " -> c" << j << ";\n";
  for (auto& note : poset.notes) os << "  // " << note << "\n";
  os << "}\n";
  return os.str();
}

std::function<bool(const NCube&)> g2_strong_filter(const psid::DomainSpec& spec,
                                                   const std::vector<psid::LeviClass>& classes,
                                                   std::vector<std::string>* notes) {
  if (spec.rs.type() != "G" ||
      spec.e.coords != RatVec{Rat(0), Rat(1)})
    throw UnsupportedError("the strong filter is only available for the G2 domain with grading 0,1");

  // class index -> axis label in the binary-cubic model
  std::vector<std::string> names;
  for (auto& c : classes) names.push_back(c.name);

  return [names, notes](const NCube& cube) -> bool {
    if (cube.n != 2) return true;
    const std::string a = names[cube.values[1]];
    const std::string b = names[cube.values[2]];
    const std::string top = names[cube.values[3]];
    if (top != "III") return true;
    if (a == "III" && b == "III") {
      if (notes)
        notes->push_back("kept constant 2-cube <III|III|III>: admissible by capacity and realizable by an "
                         "abelian 2-cone, although outside the pairwise witness table");
      return true;
    }
    if (a == "III" || b == "III") return true;  // axis restriction of a realized pair
    auto label = [](const std::string& s) {
      return s == "I" ? g2model::OrbitType::I : g2model::OrbitType::II;
    };
    return g2model::strong_2cube_verdict(label(a), label(b)).verdict;
  };
}

}  // namespace hp::cubes
