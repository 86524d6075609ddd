#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>

#include "hp/cubes.hpp"
#include "hp/diamonds.hpp"
#include "hp/g2model.hpp"
#include "hp/mirror.hpp"
#include "hp/nilpotent.hpp"
#include "hp/polarized.hpp"
#include "hp/psid.hpp"
#include "hp/rootsys.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

hp::Budget make_budget() {
  if (const char* env = std::getenv("HP_BUDGET")) {
    try {
      return hp::Budget(std::stoull(env));
    } catch (...) {
      throw hp::ConfigError("HP_BUDGET must be a positive integer");
    }
  }
  return hp::Budget();
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw hp::ConfigError("bad integer list '" + csv + "'");
    }
  }
  if (out.empty()) throw hp::ConfigError("empty integer list");
  return out;
}

hp::RatVec parse_rationals(const std::string& csv) {
  hp::RatVec out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(hp::parse_rational(item));
  if (out.empty()) throw hp::ConfigError("empty rational list");
  return out;
}

// Either a period domain (weight + hodge numbers) or a root-data domain.
struct DomainConfig {
  bool period = false;
  hp::diamonds::HodgeNumbers hodge;
  std::string root_type;
  hp::RatVec grading;
  std::string name;
};

DomainConfig resolve_config(const std::string& preset, const std::string& h_csv, int weight,
                            const std::string& root, const std::string& grading_csv, int g_param,
                            int m_param) {
  DomainConfig cfg;
  auto period = [&](int n, std::vector<int> h, std::string name) {
    cfg.period = true;
    cfg.hodge.weight = n;
    cfg.hodge.h = std::move(h);
    cfg.hodge.validate();
    cfg.name = std::move(name);
  };
  auto rootdata = [&](std::string type, hp::RatVec e, std::string name) {
    cfg.period = false;
    cfg.root_type = std::move(type);
    cfg.grading = std::move(e);
    cfg.name = std::move(name);
  };
  if (!preset.empty()) {
    int g = g_param > 0 ? g_param : 2;
    int m = m_param > 0 ? m_param : 2;
    if (preset == "curves-g") period(1, {g, g}, preset);
    else if (preset == "k3-m") period(2, {1, m, 1}, preset);
    else if (preset == "horikawa-m") period(2, {2, m_param > 0 ? m_param : 4, 2}, preset);
    else if (preset == "cy-m") period(3, {1, m, m, 1}, preset);
    else if (preset == "sp8-borel") period(7, {1, 1, 1, 1, 1, 1, 1, 1}, preset);
    else if (preset == "d4-242") rootdata("D4", {hp::Rat(0), hp::Rat(1), hp::Rat(0), hp::Rat(0)}, preset);
    else if (preset == "g2-a") rootdata("G2", {hp::Rat(1), hp::Rat(1)}, preset);
    else if (preset == "g2-b") rootdata("G2", {hp::Rat(1), hp::Rat(0)}, preset);
    else if (preset == "g2-c") rootdata("G2", {hp::Rat(0), hp::Rat(1)}, preset);
    else if (preset == "f4-adjoint") rootdata("F4", {hp::Rat(1), hp::Rat(0), hp::Rat(0), hp::Rat(0)}, preset);
    else if (preset == "cy-c3") rootdata("C3", {hp::Rat(1), hp::Rat(0), hp::Rat(1)}, preset);
    else throw hp::ConfigError("unknown preset '" + preset + "'");
    return cfg;
  }
  if (!h_csv.empty()) {
    auto h = parse_ints(h_csv);
    int n = weight >= 0 ? weight : static_cast<int>(h.size()) - 1;
    period(n, h, "custom");
    return cfg;
  }
  if (!root.empty()) {
    if (grading_csv.empty()) throw hp::ConfigError("--grading required with --root");
    rootdata(root, parse_rationals(grading_csv), "custom");
    return cfg;
  }
  throw hp::ConfigError("specify --preset, --h, or --root/--grading");
}

json rat_json(const hp::Rat& r) { return hp::to_string(r); }

json ratvec_json(const hp::RatVec& v) {
  json arr = json::array();
  for (auto& x : v) arr.push_back(rat_json(x));
  return arr;
}

// ---------------------------------------------------------------- diamonds

int cmd_diamonds(const DomainConfig& cfg, bool as_json, hp::Budget& budget) {
  if (!cfg.period) throw hp::UnsupportedError("diamonds requires a period-domain configuration");
  auto ds = hp::diamonds::enumerate_diamonds(cfg.hodge, &budget);
  auto names = hp::diamonds::class_names(cfg.hodge, ds);
  auto form = hp::nilpotent::form_for_weight(cfg.hodge.weight);

  if (as_json) {
    json out;
    out["schemaVersion"] = kSchemaVersion;
    out["weight"] = cfg.hodge.weight;
    out["hodgeNumbers"] = cfg.hodge.h;
    out["classes"] = json::array();
    for (size_t i = 0; i < ds.size(); ++i) {
      json entry;
      entry["name"] = names[i];
      entry["entries"] = json::array();
      for (auto& [pq, v] : ds[i].entries) entry["entries"].push_back({pq.first, pq.second, v});
      entry["diagram"] = hp::nilpotent::diamond_to_diagram(ds[i], form).to_string();
      entry["rankProfile"] = hp::diamonds::rank_profile(ds[i]);
      out["classes"].push_back(entry);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << ds.size() << " classes for weight " << cfg.hodge.weight << "\n";
  for (size_t i = 0; i < ds.size(); ++i) {
    auto rp = hp::diamonds::rank_profile(ds[i]);
    std::cout << names[i] << "\t" << ds[i].to_string() << "\tdiagram "
              << hp::nilpotent::diamond_to_diagram(ds[i], form).to_string() << "\tranks (";
    for (size_t l = 0; l < rp.size(); ++l) std::cout << (l ? "," : "") << rp[l];
    std::cout << ")\n";
  }
  return 0;
}

// ------------------------------------------------------------------- poset

int cmd_poset(const DomainConfig& cfg, const std::string& relation, const std::string& format,
              hp::Budget& budget) {
  if (cfg.period) {
    auto ds = hp::diamonds::enumerate_diamonds(cfg.hodge, &budget);
    auto names = hp::diamonds::class_names(cfg.hodge, ds);
    auto form = hp::nilpotent::form_for_weight(cfg.hodge.weight);

    if (relation == "polarized") {
      auto rel = hp::polarized::polarized_digraph(cfg.hodge, &budget);
      std::set<std::pair<int, int>> closure_only;
      for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = 0; j < ds.size(); ++j) {
          if (i == j || rel.has((int)i, (int)j)) continue;
          if (hp::nilpotent::closure_leq(hp::nilpotent::diamond_to_diagram(ds[i], form),
                                         hp::nilpotent::diamond_to_diagram(ds[j], form)) &&
              !hp::nilpotent::closure_leq(hp::nilpotent::diamond_to_diagram(ds[j], form),
                                          hp::nilpotent::diamond_to_diagram(ds[i], form)))
            closure_only.insert({(int)i, (int)j});
        }
      auto witnesses = hp::polarized::transitivity_report(rel);
      if (format == "dot") {
        std::cout << hp::polarized::to_dot(rel, closure_only);
      } else if (format == "json") {
        json out;
        out["schemaVersion"] = kSchemaVersion;
        out["classes"] = rel.classes;
        out["polarized"] = json::array();
        for (auto& [i, j] : rel.edges) out["polarized"].push_back({i, j});
        out["transitivityWitnesses"] = json::array();
        for (auto& w : witnesses) out["transitivityWitnesses"].push_back({w[0], w[1], w[2]});
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "classes:";
        for (auto& n : rel.classes) std::cout << " " << n;
        std::cout << "\nedges:\n";
        for (auto& [i, j] : rel.edges) std::cout << "  " << names[i] << " -> " << names[j] << "\n";
        if (witnesses.empty()) {
          std::cout << "transitivity: no failures\n";
        } else {
          std::cout << "transitivity failures:\n";
          for (auto& w : witnesses)
            std::cout << "  " << names[w[0]] << " -> " << names[w[1]] << " -> " << names[w[2]]
                      << " but not " << names[w[0]] << " -> " << names[w[2]] << "\n";
        }
      }
      return 0;
    }
    if (relation == "nilpotent") {
      std::vector<hp::nilpotent::SignedYoungDiagram> dias;
      for (auto& d : ds) dias.push_back(hp::nilpotent::diamond_to_diagram(d, form));
      bool heuristic = !hp::nilpotent::within_validated_envelope(cfg.hodge);
      if (format == "json") {
        json out;
        out["schemaVersion"] = kSchemaVersion;
        out["classes"] = names;
        out["diagrams"] = json::array();
        for (auto& dia : dias) out["diagrams"].push_back(dia.to_string());
        out["closure"] = json::array();
        for (size_t i = 0; i < dias.size(); ++i)
          for (size_t j = 0; j < dias.size(); ++j)
            if (i != j && hp::nilpotent::closure_leq(dias[i], dias[j])) out["closure"].push_back({i, j});
        out["heuristic"] = heuristic;
        std::cout << out.dump(2) << "\n";
      } else {
        if (heuristic) std::cout << "note: closure order outside the validated families (heuristic)\n";
        for (size_t i = 0; i < dias.size(); ++i)
          for (size_t j = 0; j < dias.size(); ++j)
            if (i != j && hp::nilpotent::closure_leq(dias[i], dias[j]))
              std::cout << names[i] << " <= " << names[j] << "\n";
      }
      return 0;
    }
    throw hp::UnsupportedError("relation '" + relation + "' is not available for period domains");
  }

  // root-data domain
  if (relation != "leq" && relation != "polarized")
    throw hp::UnsupportedError("relation '" + relation + "' is not available for root-data domains");
  hp::psid::DomainSpec spec{hp::rootsys::RootSystem::build(cfg.root_type), {cfg.grading}};
  auto classes = hp::psid::compute_psi(spec);
  std::set<std::pair<int, int>> edges;
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j) {
      if (i == j) continue;
      bool rel = relation == "leq"
                     ? hp::psid::leq(spec, classes[i], classes[j])
                     : (hp::psid::leq(spec, classes[i], classes[j]) &&
                        hp::psid::polarized_by_orthogonality(spec, classes[i], classes[j], classes));
      if (rel) edges.insert({(int)i, (int)j});
    }
  if (format == "json") {
    json out;
    out["schemaVersion"] = kSchemaVersion;
    json names = json::array();
    for (auto& c : classes) names.push_back(c.name);
    out["classes"] = names;
    out[relation] = json::array();
    for (auto& [i, j] : edges) out[relation].push_back({i, j});
    if (relation == "polarized" && !spec.torus_case()) out["criterion"] = "sufficient";
    std::cout << out.dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << "digraph relations {\n  rankdir=LR;\n";
    for (size_t i = 0; i < classes.size(); ++i)
      std::cout << "  n" << i << " [label=\"" << classes[i].name << "\"];\n";
    for (auto& [i, j] : edges) std::cout << "  n" << i << " -> n" << j << ";\n";
    std::cout << "}\n";
  } else {
    if (relation == "polarized" && !spec.torus_case())
      std::cout << "note: orthogonality criterion is sufficient only for this domain\n";
    for (auto& [i, j] : edges) std::cout << classes[i].name << " -> " << classes[j].name << "\n";
  }
  return 0;
}

// --------------------------------------------------------------------- psi

int cmd_psi(const DomainConfig& cfg, bool as_json) {
  if (cfg.period) throw hp::UnsupportedError("psi requires a root-data configuration");
  hp::psid::DomainSpec spec{hp::rootsys::RootSystem::build(cfg.root_type), {cfg.grading}};
  auto classes = hp::psid::compute_psi(spec);

  auto simple_str = [](const hp::rootsys::LeviSubsystem& l) {
    std::string s = "{";
    for (size_t i = 0; i < l.simpleRoots.size(); ++i) {
      if (i) s += ",";
      s += "(";
      for (size_t j = 0; j < l.simpleRoots[i].size(); ++j)
        s += (j ? "," : "") + std::to_string(l.simpleRoots[i][j]);
      s += ")";
    }
    return s + "}";
  };

  std::set<std::pair<int, int>> leq_edges, pol_edges;
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j) {
      if (i == j) continue;
      if (hp::psid::leq(spec, classes[i], classes[j])) {
        leq_edges.insert({(int)i, (int)j});
        if (hp::psid::polarized_by_orthogonality(spec, classes[i], classes[j], classes))
          pol_edges.insert({(int)i, (int)j});
      }
    }

  if (as_json) {
    json out;
    out["schemaVersion"] = kSchemaVersion;
    out["root"] = cfg.root_type;
    out["grading"] = ratvec_json(cfg.grading);
    out["torusCase"] = spec.torus_case();
    out["classes"] = json::array();
    for (auto& c : classes) {
      json entry;
      entry["name"] = c.name;
      entry["simpleRoots"] = simple_str(c.rep);
      entry["Z"] = ratvec_json(c.z.coords);
      entry["orbitSize"] = c.orbit.size();
      out["classes"].push_back(entry);
    }
    out["leq"] = json::array();
    for (auto& [i, j] : leq_edges) out["leq"].push_back({i, j});
    out["polarized"] = json::array();
    for (auto& [i, j] : pol_edges) out["polarized"].push_back({i, j});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << classes.size() << " classes for " << cfg.root_type << " with grading "
            << hp::to_string(hp::RatVec(cfg.grading)) << (spec.torus_case() ? " (torus isotropy)" : "")
            << "\n";
  for (auto& c : classes)
    std::cout << c.name << "\tS'=" << simple_str(c.rep) << "\tZ=" << hp::to_string(c.z.coords)
              << "\torbit " << c.orbit.size() << "\n";
  std::cout << "leq:";
  for (auto& [i, j] : leq_edges) std::cout << " " << classes[i].name << "<" << classes[j].name;
  std::cout << "\npolarized:";
  for (auto& [i, j] : pol_edges) std::cout << " " << classes[i].name << "<" << classes[j].name;
  std::cout << "\n";
  return 0;
}

// ------------------------------------------------------------------- cubes

int cmd_cubes(const DomainConfig& cfg, int max_n, const std::string& strong_filter,
              const std::string& format, hp::Budget& budget) {
  if (cfg.period) throw hp::UnsupportedError("cubes requires a root-data configuration");
  hp::psid::DomainSpec spec{hp::rootsys::RootSystem::build(cfg.root_type), {cfg.grading}};
  auto classes = hp::psid::compute_psi(spec);

  hp::cubes::ClassData data;
  for (size_t i = 0; i < classes.size(); ++i) {
    data.names.push_back(classes[i].name);
    if (classes[i].trivial()) data.trivial = (int)i;
    data.caps.push_back(hp::cubes::capacity(spec, classes[i]));
  }
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = 0; j < classes.size(); ++j)
      if (i != j && hp::psid::leq(spec, classes[i], classes[j]) &&
          hp::psid::polarized_by_orthogonality(spec, classes[i], classes[j], classes))
        data.polarized.insert({(int)i, (int)j});

  std::vector<std::string> notes;
  std::function<bool(const hp::cubes::NCube&)> keep;
  if (!strong_filter.empty()) {
    if (strong_filter != "g2model") throw hp::UnsupportedError("unknown strong filter '" + strong_filter + "'");
    keep = hp::cubes::g2_strong_filter(spec, classes, &notes);
  }
  auto poset = hp::cubes::secondary_poset(data, max_n, keep ? &keep : nullptr, &budget);
  poset.notes.insert(poset.notes.end(), notes.begin(), notes.end());

  if (format == "dot") {
    std::cout << hp::cubes::to_dot(poset, data.names);
    return 0;
  }
  if (format == "json") {
    json out;
    out["schemaVersion"] = kSchemaVersion;
    out["caps"] = data.caps;
    out["cubes"] = json::array();
    for (auto& c : poset.cubes) {
      json entry;
      entry["n"] = c.n;
      json values;
      for (int eps = 0; eps < (1 << c.n); ++eps) {
        std::string key;
        for (int i = 0; i < c.n; ++i) key += ((eps >> i) & 1) ? '1' : '0';
        if (c.n == 0) key = "";
        values[key] = data.names[c.values[eps]];
      }
      entry["values"] = values;
      out["cubes"].push_back(entry);
    }
    out["hasse"] = json::array();
    for (auto& [i, j] : poset.hasse) out["hasse"].push_back({i, j});
    out["notes"] = poset.notes;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "capacities:";
  for (size_t i = 0; i < data.names.size(); ++i) std::cout << " " << data.names[i] << "=" << data.caps[i];
  std::cout << "\ncubes:\n";
  for (size_t i = 0; i < poset.cubes.size(); ++i)
    std::cout << "  [" << i << "] n=" << poset.cubes[i].n << " " << poset.cubes[i].to_string(data.names)
              << "\n";
  std::cout << "hasse:";
  for (auto& [i, j] : poset.hasse) std::cout << " " << i << "->" << j;
  std::cout << "\n";
  for (auto& note : poset.notes) std::cout << "note: " << note << "\n";
  return 0;
}

// ---------------------------------------------------------------------- g2

int cmd_g2_strong(const std::string& pair) {
  auto comma = pair.find(',');
  if (comma == std::string::npos) throw hp::ConfigError("--pair expects 'X,Y' with X,Y in {I,II}");
  auto parse = [](const std::string& s) {
    if (s == "I") return hp::g2model::OrbitType::I;
    if (s == "II") return hp::g2model::OrbitType::II;
    throw hp::ConfigError("axis type must be I or II");
  };
  auto verdict = hp::g2model::strong_2cube_verdict(parse(pair.substr(0, comma)), parse(pair.substr(comma + 1)));
  std::cout << (verdict.verdict ? "strongly admissible" : "not strongly admissible") << ": "
            << verdict.reason << "\n";
  if (verdict.witness)
    std::cout << "witness: " << verdict.witness->first.to_string() << " and "
              << verdict.witness->second.to_string() << "\n";
  return 0;
}

int cmd_g2_classify(const std::string& cubic_csv) {
  auto coeffs = parse_rationals(cubic_csv);
  if (coeffs.size() != 4) throw hp::ConfigError("--cubic expects four rationals");
  hp::g2model::BinaryCubic v;
  for (int i = 0; i < 4; ++i) v.a[i] = coeffs[i];
  std::cout << hp::g2model::to_string(hp::g2model::classify(v)) << "\n";
  return 0;
}

// ------------------------------------------------------------------ mirror

int cmd_mirror(int r, const std::string& triple_path, bool use_fixture, bool as_json) {
  hp::mirror::IntersectionData data =
      use_fixture ? hp::mirror::IntersectionData::cy_fixture() : hp::mirror::IntersectionData::load(triple_path);
  if (r > 0 && r != data.r) throw hp::ConfigError("--r does not match the triple file");

  hp::diamonds::HodgeNumbers h;
  h.weight = 3;
  h.h = {1, data.r - 1, data.r - 1, 1};

  auto q = hp::mirror::pairing_matrix(data.r);
  std::vector<hp::RatMat> logs;
  for (int j = 0; j < data.r - 1; ++j) logs.push_back(hp::mirror::build_Nj(data, j));
  hp::RatMat sum(2 * data.r, hp::RatVec(2 * data.r, hp::Rat(0)));
  for (auto& n : logs)
    for (size_t i = 0; i < n.size(); ++i)
      for (size_t jj = 0; jj < n.size(); ++jj) sum[i][jj] += n[i][jj];

  auto skew_ok = [&](const hp::RatMat& n) {
    for (size_t i = 0; i < n.size(); ++i)
      for (size_t jj = 0; jj < n.size(); ++jj) {
        hp::Rat acc(0);
        for (size_t k = 0; k < n.size(); ++k) acc += n[k][i] * q[k][jj] + q[i][k] * n[k][jj];
        if (acc != hp::Rat(0)) return false;
      }
    return true;
  };

  json out;
  out["schemaVersion"] = kSchemaVersion;
  out["r"] = data.r;
  json matrices = json::array();
  for (size_t j = 0; j < logs.size(); ++j) {
    auto profile = hp::mirror::rank_profile_matrix(logs[j]);
    json entry;
    entry["index"] = j;
    json rows = json::array();
    for (auto& row : logs[j]) rows.push_back(ratvec_json(row));
    entry["matrix"] = rows;
    entry["rankProfile"] = {profile[0], profile[1], profile[2]};
    entry["class"] = hp::mirror::classify_type(profile, h);
    entry["pairingCompatible"] = skew_ok(logs[j]);
    matrices.push_back(entry);
  }
  out["logs"] = matrices;
  auto sum_profile = hp::mirror::rank_profile_matrix(sum);
  out["sum"] = {{"rankProfile", {sum_profile[0], sum_profile[1], sum_profile[2]}},
                {"class", hp::mirror::classify_type(sum_profile, h)}};

  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (size_t j = 0; j < logs.size(); ++j) {
    std::cout << "N" << j << ":\n";
    for (auto& row : logs[j]) {
      for (size_t c = 0; c < row.size(); ++c) std::cout << (c ? "\t" : "  ") << hp::to_string(row[c]);
      std::cout << "\n";
    }
    auto profile = hp::mirror::rank_profile_matrix(logs[j]);
    std::cout << "  ranks (" << profile[0] << "," << profile[1] << "," << profile[2] << ") class "
              << hp::mirror::classify_type(profile, h)
              << (skew_ok(logs[j]) ? "" : "  [pairing check FAILED]") << "\n";
  }
  std::cout << "N_sum: ranks (" << sum_profile[0] << "," << sum_profile[1] << "," << sum_profile[2]
            << ") class " << hp::mirror::classify_type(sum_profile, h) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification tables for one-parameter degenerations of polarized Hodge structures"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");
  app.set_help_all_flag("--help-all", "print help for all subcommands");

  std::string preset, h_csv, root, grading_csv, relation = "polarized", format = "text";
  std::string strong_filter, pair, cubic_csv, triple_path;
  int weight = -1, g_param = -1, m_param = -1, max_n = 2, r_param = -1;
  bool as_json = false;

  auto add_domain_opts = [&](CLI::App* cmd, bool with_relation) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--preset", preset, "named domain preset");
    cmd->add_option("--h", h_csv, "hodge numbers, comma separated");
    cmd->add_option("--weight", weight, "weight (defaults to #h - 1)");
    cmd->add_option("--root", root, "root system, e.g. G2");
    cmd->add_option("--grading", grading_csv, "grading vector in the S-basis");
    cmd->add_option("--g", g_param, "genus parameter for curves-g");
    cmd->add_option("--m", m_param, "middle hodge number parameter");
    if (with_relation) cmd->add_option("--relation", relation, "polarized | nilpotent | leq");
    cmd->add_option("--format", format, "text | json | dot");
  };

  auto* diamonds_cmd = app.add_subcommand("diamonds", "enumerate degeneration classes of a period domain");
  add_domain_opts(diamonds_cmd, false);
  diamonds_cmd->add_flag("--json", as_json, "emit JSON");

  auto* poset_cmd = app.add_subcommand("poset", "relation digraph on the classes");
  add_domain_opts(poset_cmd, true);

  auto* psi_cmd = app.add_subcommand("psi", "class table of a root-data domain");
  add_domain_opts(psi_cmd, false);
  psi_cmd->add_flag("--json", as_json, "emit JSON");

  auto* cubes_cmd = app.add_subcommand("cubes", "admissible cubes and the secondary poset");
  add_domain_opts(cubes_cmd, false);
  cubes_cmd->add_option("--max-n", max_n, "largest cube dimension");
  cubes_cmd->add_option("--strong-filter", strong_filter, "apply a strong-admissibility filter (g2model)");

  auto* g2_cmd = app.add_subcommand("g2", "binary-cubic model queries");
  auto* g2_strong = g2_cmd->add_subcommand("strong", "strong admissibility of a 2-cube");
  g2_strong->add_option("--pair", pair, "axis types, e.g. II,II")->required();
  auto* g2_classify = g2_cmd->add_subcommand("classify", "orbit type of a cubic");
  g2_classify->add_option("--cubic", cubic_csv, "A0,A1,A2,A3 as rationals")->required();
  g2_cmd->require_subcommand(1);

  auto* mirror_cmd = app.add_subcommand("mirror", "monodromy logarithms from intersection data");
  mirror_cmd->add_option("--r", r_param, "number of integral boundary classes");
  mirror_cmd->add_option("--triple", triple_path, "triple intersection file: lines 'a b c value'");
  mirror_cmd->add_option("--preset", preset, "mirror-cy for the bundled fixture");
  mirror_cmd->add_flag("--json", as_json, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    hp::Budget budget = make_budget();
    if (diamonds_cmd->parsed())
      return cmd_diamonds(resolve_config(preset, h_csv, weight, root, grading_csv, g_param, m_param),
                          as_json || format == "json", budget);
    if (poset_cmd->parsed())
      return cmd_poset(resolve_config(preset, h_csv, weight, root, grading_csv, g_param, m_param), relation,
                       format, budget);
    if (psi_cmd->parsed())
      return cmd_psi(resolve_config(preset, h_csv, weight, root, grading_csv, g_param, m_param),
                     as_json || format == "json");
    if (cubes_cmd->parsed())
      return cmd_cubes(resolve_config(preset, h_csv, weight, root, grading_csv, g_param, m_param), max_n,
                       strong_filter, format, budget);
    if (g2_cmd->parsed()) {
      if (g2_strong->parsed()) return cmd_g2_strong(pair);
      return cmd_g2_classify(cubic_csv);
    }
    if (mirror_cmd->parsed()) {
      bool fixture = preset == "mirror-cy" || (triple_path.empty() && preset.empty());
      if (!preset.empty() && preset != "mirror-cy") throw hp::ConfigError("unknown mirror preset");
      return cmd_mirror(r_param, triple_path, fixture && triple_path.empty(), as_json);
    }
  } catch (const hp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hp::InvariantError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hp::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const hp::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 4;
  } catch (const hp::FixtureError& e) {
    std::cerr << "fixture mismatch: " << e.what() << "\n";
    return 5;
  }
  return 2;
}
