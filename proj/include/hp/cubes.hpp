#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hp/psid.hpp"

namespace hp::cubes {

// Maximal number of independent commuting degenerations compatible with the
// class: the size of the largest sum-free set of roots in the (-1)-graded
// piece of its diagonal Levi.
int capacity(const psid::DomainSpec& spec, const psid::LeviClass& c);

// A labeling of the Boolean lattice C_n by class indices, stored by bitmask;
// values[0] is the trivial class.
struct NCube {
  int n = 0;
  std::vector<int> values;  // size 1 << n

  bool operator==(const NCube& o) const = default;
  bool operator<(const NCube& o) const;
  std::string to_string(const std::vector<std::string>& names) const;
};

NCube canonical_form(const NCube& c);

// Inputs shared by the period-domain and root-data pipelines.
struct ClassData {
  std::vector<std::string> names;
  int trivial = 0;
  std::set<std::pair<int, int>> polarized;  // irreflexive edge set
  std::vector<int> caps;
};

// All admissible n-cubes up to coordinate permutations, canonical and sorted.
std::vector<NCube> enumerate_admissible(const ClassData& data, int n, Budget* budget = nullptr);

// whether a k-cube embeds as an axis restriction of an n-cube
bool cube_leq(const NCube& small, const NCube& big);

struct SecondaryPoset {
  std::vector<NCube> cubes;                // all dims <= maxN
  std::set<std::pair<int, int>> hasse;     // transitive reduction of cube_leq
  std::vector<std::string> notes;
};

// keep(cube) -> false drops the cube; nullopt keeps everything
SecondaryPoset secondary_poset(const ClassData& data, int maxN,
                               const std::function<bool(const NCube&)>* keep = nullptr,
                               Budget* budget = nullptr);

std::string to_dot(const SecondaryPoset& poset, const std::vector<std::string>& names);

// Strong-admissibility filter for the rank-two exceptional domain with
// Hodge numbers (2,3,2), delegating pairwise verdicts to the binary-cubic
// model.  Throws UnsupportedError for any other domain.
std::function<bool(const NCube&)> g2_strong_filter(const psid::DomainSpec& spec,
                                                   const std::vector<psid::LeviClass>& classes,
                                                   std::vector<std::string>* notes);

}  // namespace hp::cubes
