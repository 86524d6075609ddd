#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hp/diamonds.hpp"

namespace hp::polarized {

// The pairwise relation data on one domain's classes.  Stored edges are
// irreflexive; antisymmetry is asserted on construction.
struct RelationSet {
  std::vector<std::string> classes;
  std::set<std::pair<int, int>> edges;       // i -> j meaning class_i precedes class_j
  std::set<std::pair<int, int>> generating;  // transitive-reduction-style display sublist

  bool has(int i, int j) const { return edges.count({i, j}) > 0; }
};

// Whether the class of d2 is reachable from the class of d1 by adjoining one
// commuting degeneration: decided by expressing the diamond of d2 as a sum of
// shifted diamonds over the primitive sub-domains of d1.
bool is_polarized(const diamonds::HodgeDiamond& d1, const diamonds::HodgeDiamond& d2,
                  const diamonds::HodgeNumbers& h, Budget* budget = nullptr);

RelationSet polarized_digraph(const diamonds::HodgeNumbers& h, Budget* budget = nullptr);

// Witnesses (a,b,c) with a->b and b->c stored but a->c absent.
std::vector<std::array<int, 3>> transitivity_report(const RelationSet& r);

// Hodge numbers of the derived domains D_k of d (weight n+k, one per
// nonempty primitive layer), indexed by k.
std::vector<std::pair<int, diamonds::HodgeNumbers>> derived_domains(const diamonds::HodgeDiamond& d);

std::string to_dot(const RelationSet& r, const std::set<std::pair<int, int>>& dashed_extra = {});

}  // namespace hp::polarized
