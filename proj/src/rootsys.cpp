#include "hp/rootsys.hpp"

#include <algorithm>
#include <set>

namespace hp::rootsys {

Rat pair_root(const Root& alpha, const GradingVector& v) {
  Rat acc(0);
  for (size_t j = 0; j < alpha.size(); ++j) acc += Rat(alpha[j]) * v.coords[j];
  return acc;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(const std::string& type, int rank) {
  auto chain = [&](int r) {
    std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < r; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    return c;
  };
  if (type == "A") return chain(rank);
  if (type == "B") {
    if (rank < 2) throw ConfigError("B requires rank >= 2");
    auto c = chain(rank);
    c[rank - 2][rank - 1] = -1;
    c[rank - 1][rank - 2] = -2;
    return c;
  }
  if (type == "C") {
    if (rank < 2) throw ConfigError("C requires rank >= 2");
    auto c = chain(rank);
    c[rank - 2][rank - 1] = -2;
    c[rank - 1][rank - 2] = -1;
    return c;
  }
  if (type == "D") {
    if (rank < 3) throw ConfigError("D requires rank >= 3");
    auto c = chain(rank - 1);
    for (auto& row : c) row.push_back(0);
    c.push_back(std::vector<int>(rank, 0));
    c[rank - 1][rank - 1] = 2;
    c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0;
    c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1;
    return c;
  }
  if (type == "E") {
    if (rank < 6 || rank > 8) throw ConfigError("E requires rank 6..8");
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    auto bond = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
    bond(0, 2);
    bond(2, 3);
    bond(1, 3);
    bond(3, 4);
    bond(4, 5);
    if (rank >= 7) bond(5, 6);
    if (rank >= 8) bond(6, 7);
    return c;
  }
  if (type == "F") {
    if (rank != 4) throw ConfigError("F requires rank 4");
    std::vector<std::vector<int>> c{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    return c;
  }
  if (type == "G") {
    if (rank != 2) throw ConfigError("G requires rank 2");
    return {{2, -3}, {-1, 2}};
  }
  throw ConfigError("unsupported type '" + type + "'");
}

}  // namespace

RootSystem RootSystem::build(const std::string& type, int rank) {
  if (rank < 1 || rank > 8) throw ConfigError("rank must be within 1..8");
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  if (type == "A" && rank == 1)
    rs.cartan_ = {{2}};
  else
    rs.cartan_ = cartan_matrix(type, rank);

  // closure of the simple roots under the simple reflections
  std::set<Root> roots;
  std::vector<Root> frontier;
  for (int i = 0; i < rank; ++i) {
    Root a(rank, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& a : frontier)
      for (int i = 0; i < rank; ++i) {
        long long pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += (long long)a[j] * rs.cartan_[i][j];
        Root b = a;
        b[i] -= (int)pairing;
        if (roots.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  for (const auto& a : roots) {
    bool nonneg = std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
    if (nonneg) rs.positive_.push_back(a);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end());
  rs.finish();
  return rs;
}

RootSystem RootSystem::build(const std::string& spec) {
  if (spec.size() < 2) throw ConfigError("root system spec too short: '" + spec + "'");
  std::string type(1, spec[0]);
  int rank;
  try {
    rank = std::stoi(spec.substr(1));
  } catch (...) {
    throw ConfigError("bad root system spec '" + spec + "'");
  }
  return build(type, rank);
}

void RootSystem::finish() {
  all_ = positive_;
  for (const auto& a : positive_) {
    Root neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    all_.push_back(neg);
  }
  for (size_t i = 0; i < all_.size(); ++i) index_[all_[i]] = (int)i;

  // symmetrizing factors d_i with d_i C[i][j] = d_j C[j][i]
  RatVec d(rank_, Rat(0));
  for (int start = 0; start < rank_; ++start) {
    if (d[start] != Rat(0)) continue;
    d[start] = Rat(1);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < rank_; ++j) {
        if (i == j || cartan_[i][j] == 0 || d[j] != Rat(0)) continue;
        d[j] = d[i] * Rat(cartan_[i][j]) / Rat(cartan_[j][i]);
        stack.push_back(j);
      }
    }
  }
  bform_.assign(rank_, RatVec(rank_, Rat(0)));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) bform_[i][j] = d[i] * Rat(cartan_[i][j]);
}

bool RootSystem::is_root(const Root& v) const { return index_.count(v) > 0; }

int RootSystem::root_index(const Root& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

Root RootSystem::simple_root(int i) const {
  Root a(rank_, 0);
  a[i] = 1;
  return a;
}

bool RootSystem::strongly_orthogonal(const Root& a, const Root& b) const {
  Root sum(rank_), diff(rank_);
  bool equal = true, opposite = true;
  for (int i = 0; i < rank_; ++i) {
    sum[i] = a[i] + b[i];
    diff[i] = a[i] - b[i];
    equal &= a[i] == b[i];
    opposite &= a[i] == -b[i];
  }
  if (equal || opposite) return false;  // the two sl(2)'s coincide
  return !is_root(sum) && !is_root(diff);
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  Rat acc(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) acc += Rat(a[i]) * Rat(b[j]) * bform_[i][j];
  }
  return acc;
}

GradingVector RootSystem::coroot(const Root& beta) const {
  Rat norm = inner(beta, beta);
  if (norm == Rat(0)) throw InvariantError("coroot of a null vector");
  GradingVector h;
  h.coords.resize(rank_);
  for (int j = 0; j < rank_; ++j) h.coords[j] = Rat(2) * inner(simple_root(j), beta) / norm;
  return h;
}

std::vector<int> RootSystem::reflection_perm(const Root& beta) const {
  if (!is_root(beta)) throw InvariantError("reflection in a non-root");
  GradingVector h = coroot(beta);
  std::vector<int> perm(all_.size());
  for (size_t i = 0; i < all_.size(); ++i) {
    Rat pairing = pair_root(all_[i], h);
    if (pairing.denominator() != 1) throw InvariantError("non-integral root pairing");
    Root image = all_[i];
    for (int j = 0; j < rank_; ++j) image[j] -= (int)pairing.numerator() * beta[j];
    int idx = root_index(image);
    if (idx < 0) throw InvariantError("reflection left the root set");
    perm[i] = idx;
  }
  return perm;
}

std::vector<std::vector<int>> RootSystem::subgroup(const std::vector<std::vector<int>>& generators,
                                                   std::uint64_t order_bound) const {
  std::vector<int> id(all_.size());
  for (size_t i = 0; i < id.size(); ++i) id[i] = (int)i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (const auto& g : generators) {
        std::vector<int> wg(w.size());
        for (size_t i = 0; i < w.size(); ++i) wg[i] = g[w[i]];
        if (seen.size() >= order_bound) throw BudgetError("group order bound exceeded");
        if (seen.insert(wg).second) next.push_back(wg);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> RootSystem::weyl_group(std::uint64_t order_bound) const {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(reflection_perm(simple_root(i)));
  return subgroup(gens, order_bound);
}

namespace {

// row echelon basis over Q for span-membership tests
struct Echelon {
  RatMat rows;  // reduced rows, each with a leading pivot column
  std::vector<int> pivots;

  // returns true (and absorbs v) when v is independent of the current rows
  bool add(RatVec v) {
    reduce(v);
    int lead = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != Rat(0)) {
        lead = (int)i;
        break;
      }
    if (lead < 0) return false;
    Rat d = v[lead];
    for (auto& x : v) x /= d;
    rows.push_back(v);
    pivots.push_back(lead);
    return true;
  }

  bool contains(RatVec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == Rat(0); });
  }

 private:
  void reduce(RatVec& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat f = v[pivots[r]];
      if (f == Rat(0)) continue;
      for (size_t c = 0; c < v.size(); ++c) v[c] -= f * rows[r][c];
    }
  }
};

RatVec to_ratvec(const Root& r) {
  RatVec v(r.size());
  for (size_t i = 0; i < r.size(); ++i) v[i] = Rat(r[i]);
  return v;
}

}  // namespace

LeviSubsystem RootSystem::span_closure(const std::vector<Root>& gens) const {
  Echelon e;
  for (const auto& g : gens) e.add(to_ratvec(g));
  LeviSubsystem l;
  for (const auto& a : all_)
    if (e.contains(to_ratvec(a))) l.roots.push_back(a);
  std::sort(l.roots.begin(), l.roots.end());

  // simple system: indecomposable positive members
  std::vector<Root> pos;
  for (const auto& a : l.roots)
    if (std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; })) pos.push_back(a);
  std::set<Root> posset(pos.begin(), pos.end());
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      Root c(rank_);
      for (int i = 0; i < rank_; ++i) c[i] = a[i] - b[i];
      if (c == b || std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) continue;
      if (posset.count(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) l.simpleRoots.push_back(a);
  }
  return l;
}

LeviSubsystem RootSystem::full_subsystem() const {
  std::vector<Root> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(simple_root(i));
  return span_closure(gens);
}

std::vector<LeviSubsystem> RootSystem::levi_subsystems() const {
  std::set<std::vector<Root>> seen;
  std::vector<LeviSubsystem> out;
  out.push_back(LeviSubsystem{});  // the Cartan itself
  seen.insert({});

  // independent subsets of positive roots, up to full rank
  std::vector<Root> chosen;
  std::vector<Echelon> stack{Echelon{}};
  auto rec = [&](auto&& self, size_t from) -> void {
    if ((int)chosen.size() >= 1) {
      auto l = span_closure(chosen);
      if (seen.insert(l.roots).second) out.push_back(l);
    }
    if ((int)chosen.size() == rank_) return;
    for (size_t i = from; i < positive_.size(); ++i) {
      Echelon e = stack.back();
      if (!e.add(to_ratvec(positive_[i]))) continue;  // dependent, skip
      chosen.push_back(positive_[i]);
      stack.push_back(std::move(e));
      self(self, i + 1);
      stack.pop_back();
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

GradingVector RootSystem::semisimple_projection(const LeviSubsystem& l, const GradingVector& e) const {
  GradingVector z;
  z.coords.assign(rank_, Rat(0));
  const auto& s = l.simpleRoots;
  if (s.empty()) return z;

  std::vector<GradingVector> coroots;
  for (const auto& b : s) coroots.push_back(coroot(b));

  RatMat m(s.size(), RatVec(s.size()));
  RatVec rhs(s.size());
  for (size_t j = 0; j < s.size(); ++j) {
    for (size_t k = 0; k < s.size(); ++k) m[j][k] = pair_root(s[j], coroots[k]);
    rhs[j] = pair_root(s[j], e);
  }
  RatVec x = solve_linear(m, rhs);  // singular only on a malformed subsystem
  for (size_t k = 0; k < s.size(); ++k)
    for (int j = 0; j < rank_; ++j) z.coords[j] += Rat(2) * x[k] * coroots[k].coords[j];
  return z;
}

bool RootSystem::is_distinguished(const LeviSubsystem& l, const GradingVector& z) const {
  if (l.roots.empty()) return true;  // trivial case

  std::map<Root, long long> value;
  for (const auto& a : l.roots) {
    Rat p = pair_root(a, z);
    if (p.denominator() != 1)
      throw InvariantError("is_distinguished: grading vector pairs non-integrally with the subsystem");
    value[a] = p.numerator();
  }

  long long zeros = 0, twos = 0;
  for (auto& [a, v] : value) {
    zeros += v == 0;
    twos += v == 2;
  }
  if (zeros + (long long)l.simpleRoots.size() != twos) return false;

  // the 2-graded root spaces must generate everything of positive degree
  std::set<Root> rootset(l.roots.begin(), l.roots.end());
  std::set<Root> two_layer, reach;
  for (auto& [a, v] : value)
    if (v == 2) two_layer.insert(a);
  reach = two_layer;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Root> fresh;
    for (const auto& g : reach)
      for (const auto& a : two_layer) {
        Root sum(rank_);
        for (int i = 0; i < rank_; ++i) sum[i] = g[i] + a[i];
        if (rootset.count(sum) && !reach.count(sum)) fresh.push_back(sum);
      }
    for (auto& f : fresh) changed |= reach.insert(f).second;
  }
  for (auto& [a, v] : value)
    if (v > 0 && !reach.count(a)) return false;
  return true;
}

RatMat RootSystem::fundamental_weights() const {
  RatMat c(rank_, RatVec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i][j] = Rat(cartan_[i][j]);
  // omega_i(H_k) = delta_ik  <=>  rows of (C^T)^{-1}
  RatMat ct(rank_, RatVec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) ct[i][j] = c[j][i];
  return invert(ct);
}

LeviSubsystem RootSystem::apply_perm(const std::vector<int>& perm, const LeviSubsystem& l) const {
  std::vector<Root> mapped;
  for (const auto& a : l.roots) mapped.push_back(all_[perm[root_index(a)]]);
  return span_closure(mapped);
}

GradingVector RootSystem::apply_perm_to_vector(const std::vector<int>& perm, const GradingVector& v) const {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = (int)i;
  GradingVector out;
  out.coords.resize(rank_);
  for (int j = 0; j < rank_; ++j) {
    const Root& pre = all_[inv[root_index(simple_root(j))]];
    out.coords[j] = pair_root(pre, v);
  }
  return out;
}

}  // namespace hp::rootsys
