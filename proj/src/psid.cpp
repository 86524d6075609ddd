#include "hp/psid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hp::psid {

using rootsys::GradingVector;
using rootsys::LeviSubsystem;
using rootsys::Root;

void DomainSpec::validate() const {
  if (e.coords.size() != static_cast<size_t>(rs.rank())) throw ConfigError("grading vector has wrong length");
  for (const auto& a : rs.positive_roots())
    if (pair_root(a, e).denominator() != 1)
      throw ConfigError("grading vector must pair integrally with every root");
}

std::vector<std::vector<int>> DomainSpec::w0() const {
  std::vector<std::vector<int>> gens;
  for (const auto& a : rs.positive_roots())
    if (pair_root(a, e) == Rat(0)) gens.push_back(rs.reflection_perm(a));
  return rs.subgroup(gens);
}

bool DomainSpec::torus_case() const {
  for (const auto& a : rs.positive_roots())
    if (pair_root(a, e) == Rat(0)) return false;
  return true;
}

namespace {

// representative choice: fewest total coordinates, then lexicographic
std::pair<long long, std::vector<Root>> canon_key(const LeviSubsystem& l) {
  long long weight = 0;
  for (const auto& a : l.roots)
    for (int c : a) weight += std::abs(c);
  return {weight, l.roots};
}

struct NameRow {
  std::string name;
  std::vector<long long> z;
};

// Bundled class-name tables keyed on (type, rank, grading).  Z entries are
// matched up to the W^0 action.
std::vector<NameRow> name_table(const std::string& type, int rank, const RatVec& e) {
  auto is = [&](const char* t, int r, std::vector<long long> grading) {
    if (type != t || rank != r || e.size() != grading.size()) return false;
    for (size_t i = 0; i < grading.size(); ++i)
      if (e[i] != Rat(grading[i])) return false;
    return true;
  };
  if (is("G", 2, {1, 1}))
    return {{"0", {0, 0}}, {"I", {-1, 2}}, {"II", {2, -3}}, {"III", {2, 2}}};
  if (is("G", 2, {1, 0})) return {{"0", {0, 0}}, {"I", {2, -3}}};
  if (is("G", 2, {0, 1}))
    return {{"0", {0, 0}}, {"I", {-1, 2}}, {"II", {1, 0}}, {"III", {0, 2}}};
  if (is("D", 4, {0, 1, 0, 0}))
    return {{"0", {0, 0, 0, 0}},      {"I", {-1, 2, -1, -1}}, {"II", {-2, 2, 0, 0}},
            {"IIIa", {0, 2, 0, -2}},  {"IIIb", {0, 2, -2, 0}}, {"IV", {-1, 2, 1, -1}},
            {"V", {0, 2, 0, 0}}};
  if (is("C", 4, {1, 1, 1, 1}))
    return {{"{}", {0, 0, 0, 0}},
            {"{a1}", {2, -1, 0, 0}},
            {"{a2}", {-1, 2, -1, 0}},
            {"{a3}", {0, -1, 2, -2}},
            {"{a4}", {0, 0, -1, 2}},
            {"{a1,a2}", {2, 2, -2, 0}},
            {"{a1,a3}", {2, -2, 2, -2}},
            {"{a1,a4}", {2, -1, -1, 2}},
            {"{a2,a3}", {-2, 2, 2, -4}},
            {"{a2,a4}", {-1, 2, -2, 2}},
            {"{a3,a4}", {0, -3, 2, 2}},
            {"{a1,a2,a3}", {2, 2, 2, -6}},
            {"{a1,a2,a4}", {2, 2, -3, 2}},
            {"{a1,a3,a4}", {2, -4, 2, 2}},
            {"{a2,a3,a4}", {-5, 2, 2, 2}},
            {"{a1,a2,a3,a4}", {2, 2, 2, 2}}};
  return {};
}

}  // namespace

std::vector<LeviClass> compute_psi(const DomainSpec& spec) {
  spec.validate();
  const auto& rs = spec.rs;

  std::vector<std::pair<LeviSubsystem, GradingVector>> survivors;
  for (const auto& l : rs.levi_subsystems()) {
    GradingVector z = rs.semisimple_projection(l, spec.e);
    if (rs.is_distinguished(l, z)) survivors.push_back({l, z});
  }

  auto w0 = spec.w0();

  std::set<std::vector<Root>> used;
  std::vector<LeviClass> classes;
  for (auto& [l, z] : survivors) {
    if (used.count(l.roots)) continue;
    std::set<std::vector<Root>> orbit_roots;
    std::vector<LeviSubsystem> orbit;
    for (const auto& w : w0) {
      auto img = rs.apply_perm(w, l);
      if (orbit_roots.insert(img.roots).second) orbit.push_back(img);
    }
    for (auto& rset : orbit_roots) used.insert(rset);

    auto rep = *std::min_element(orbit.begin(), orbit.end(), [](const LeviSubsystem& a, const LeviSubsystem& b) {
      return canon_key(a) < canon_key(b);
    });
    LeviClass c;
    c.rep = rep;
    c.z = rs.semisimple_projection(rep, spec.e);
    std::sort(orbit.begin(), orbit.end());
    c.orbit = std::move(orbit);
    classes.push_back(std::move(c));
  }

  std::sort(classes.begin(), classes.end(), [](const LeviClass& a, const LeviClass& b) {
    if (a.rep.roots.size() != b.rep.roots.size()) return a.rep.roots.size() < b.rep.roots.size();
    return canon_key(a.rep) < canon_key(b.rep);
  });

  // attach names: bundled table when available, positional otherwise
  auto table = name_table(rs.type(), rs.rank(), spec.e.coords);
  if (!table.empty()) {
    if (table.size() != classes.size())
      throw FixtureError("bundled class table size " + std::to_string(table.size()) +
                         " does not match computed class count " + std::to_string(classes.size()));
    std::vector<bool> taken(table.size(), false);
    for (auto& c : classes) {
      // the table Z must be hit by some W^0-translate of the class Z
      std::set<RatVec> zorbit;
      for (const auto& w : w0) zorbit.insert(rs.apply_perm_to_vector(w, c.z).coords);
      bool matched = false;
      for (size_t t = 0; t < table.size() && !matched; ++t) {
        if (taken[t]) continue;
        RatVec zt(table[t].z.size());
        for (size_t i = 0; i < zt.size(); ++i) zt[i] = Rat(table[t].z[i]);
        if (zorbit.count(zt)) {
          c.name = table[t].name;
          taken[t] = true;
          matched = true;
        }
      }
      if (!matched) throw FixtureError("computed class has no row in the bundled table (Z = " + to_string(c.z.coords) + ")");
    }
  } else {
    for (size_t i = 0; i < classes.size(); ++i)
      classes[i].name = classes[i].trivial() ? "0" : "L" + std::to_string(i);
  }
  return classes;
}

LeviSubsystem diagonal_levi(const DomainSpec& spec, const LeviClass& c) {
  GradingVector v;
  v.coords.resize(spec.rs.rank());
  for (int j = 0; j < spec.rs.rank(); ++j) v.coords[j] = Rat(2) * spec.e.coords[j] - c.z.coords[j];
  std::vector<Root> zeros;
  for (const auto& a : spec.rs.all_roots())
    if (pair_root(a, v) == Rat(0)) zeros.push_back(a);
  return spec.rs.span_closure(zeros);
}

bool leq(const DomainSpec& spec, const LeviClass& c1, const LeviClass& c2) {
  auto dl2 = diagonal_levi(spec, c2);
  std::set<Root> target(dl2.roots.begin(), dl2.roots.end());
  for (const auto& l1 : c1.orbit) {
    bool inside = std::all_of(l1.roots.begin(), l1.roots.end(),
                              [&](const Root& a) { return target.count(a) > 0; });
    if (inside) return true;
  }
  return false;
}

bool polarized_by_orthogonality(const DomainSpec& spec, const LeviClass& c1, const LeviClass& c2,
                                const std::vector<LeviClass>& classes) {
  const auto& rs = spec.rs;
  std::set<std::vector<Root>> orbit2;
  for (const auto& l : c2.orbit) orbit2.insert(l.roots);

  // full cross strong orthogonality makes the two subalgebras commute, so
  // any pair of degenerations they carry commutes as well
  auto cross_orthogonal = [&](const LeviSubsystem& x, const LeviSubsystem& y) {
    for (const auto& a : x.roots)
      for (const auto& b : y.roots)
        if (!rs.strongly_orthogonal(a, b)) return false;
    return true;
  };

  for (const auto& l1 : c1.orbit) {
    GradingVector z1 = rs.semisimple_projection(l1, spec.e);
    for (const auto& cp : classes) {
      for (const auto& lp : cp.orbit) {
        if (!cross_orthogonal(l1, lp)) continue;

        std::vector<Root> gens = l1.roots;
        gens.insert(gens.end(), lp.roots.begin(), lp.roots.end());
        auto join = rs.span_closure(gens);
        if (join.simpleRoots.size() != l1.simpleRoots.size() + lp.simpleRoots.size()) continue;
        if (!orbit2.count(join.roots)) continue;

        // the joined degeneration must carry the sum of the two gradings
        GradingVector zp = rs.semisimple_projection(lp, spec.e);
        GradingVector zj = rs.semisimple_projection(join, spec.e);
        bool additive = true;
        for (int j = 0; j < rs.rank(); ++j)
          if (zj.coords[j] != z1.coords[j] + zp.coords[j]) additive = false;
        if (additive) return true;
      }
    }
  }
  return false;
}

std::optional<std::vector<RatVec>> rep_weights(const rootsys::RootSystem& rs) {
  std::vector<RatVec> w;
  if (rs.type() == "C") {
    // standard representation: +-eps_i, with eps_i = a_i + ... + a_{r-1} + a_r/2
    int r = rs.rank();
    for (int i = 0; i < r; ++i) {
      RatVec eps(r, Rat(0));
      for (int j = i; j < r - 1; ++j) eps[j] = Rat(1);
      eps[r - 1] = Rat(1, 2);
      w.push_back(eps);
      for (auto& x : eps) x = -x;
      w.push_back(eps);
    }
    return w;
  }
  if (rs.type() == "G") {
    w.push_back(RatVec(2, Rat(0)));
    for (const auto& a : rs.all_roots()) {
      if (rs.inner(a, a) != rs.inner(rs.simple_root(0), rs.simple_root(0))) continue;  // short only
      RatVec v{Rat(a[0]), Rat(a[1])};
      w.push_back(v);
    }
    return w;
  }
  return std::nullopt;
}

namespace {
Rat weight_pairing(const RatVec& w, const GradingVector& v) {
  Rat acc(0);
  for (size_t j = 0; j < w.size(); ++j) acc += w[j] * v.coords[j];
  return acc;
}
}  // namespace

int rep_hodge_weight(const DomainSpec& spec, const std::vector<RatVec>& weights) {
  Rat top(0);
  for (const auto& w : weights) top = std::max(top, weight_pairing(w, spec.e));
  Rat n = Rat(2) * top;
  if (n.denominator() != 1) throw InvariantError("representation weights give a non-integral Hodge weight");
  return (int)n.numerator();
}

diamonds::HodgeDiamond class_diamond(const DomainSpec& spec, const LeviClass& c,
                                     const std::vector<RatVec>& weights, int hodge_weight) {
  diamonds::HodgeDiamond d;
  d.weight = hodge_weight;
  Rat half = Rat(hodge_weight, 2);
  for (const auto& w : weights) {
    Rat pe = weight_pairing(w, spec.e);
    Rat pz = weight_pairing(w, c.z);
    Rat p = pe + half, q = pz - pe + half;
    if (p.denominator() != 1 || q.denominator() != 1)
      throw InvariantError("class diamond has non-integral bidegrees");
    d.entries[{(int)p.numerator(), (int)q.numerator()}] += 1;
  }
  return d;
}

}  // namespace hp::psid
