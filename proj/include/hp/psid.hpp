#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hp/diamonds.hpp"
#include "hp/rootsys.hpp"

namespace hp::psid {

// A Mumford-Tate domain presented by its root data: the root system together
// with the grading vector of the Hodge structure on the Lie algebra.
struct DomainSpec {
  rootsys::RootSystem rs;
  rootsys::GradingVector e;

  void validate() const;  // integral pairing with every root
  // W^0: the subgroup generated by reflections in the roots annihilated by e
  std::vector<std::vector<int>> w0() const;
  // no root is annihilated by e (the isotropy group is a torus)
  bool torus_case() const;
};

struct LeviClass {
  rootsys::LeviSubsystem rep;  // canonical orbit representative
  rootsys::GradingVector z;    // distinguished grading vector of rep
  std::string name;
  std::vector<rootsys::LeviSubsystem> orbit;

  bool trivial() const { return rep.roots.empty(); }
};

// All classes, trivial first, deterministically ordered and named.
std::vector<LeviClass> compute_psi(const DomainSpec& spec);

// subsystem cut out by 2E - Z (the Hodge-Tate directions of the class)
rootsys::LeviSubsystem diagonal_levi(const DomainSpec& spec, const LeviClass& c);

// c1 <= c2: some W^0-translate of c1's representative sits inside the
// diagonal Levi of c2.
bool leq(const DomainSpec& spec, const LeviClass& c1, const LeviClass& c2);

// Sufficient test for the polarized relation c1 <= c2 via a strongly
// orthogonal complementary class; exact in the torus case.
bool polarized_by_orthogonality(const DomainSpec& spec, const LeviClass& c1, const LeviClass& c2,
                                const std::vector<LeviClass>& classes);

// Weight multiset of a defining Hodge representation, when one is bundled
// (C-type standard representation, the 7-dimensional G2 representation).
std::optional<std::vector<RatVec>> rep_weights(const rootsys::RootSystem& rs);

// Hodge-structure weight of the bundled representation for the given grading
// (max of 2 w(E) over the weights w).
int rep_hodge_weight(const DomainSpec& spec, const std::vector<RatVec>& weights);

// Diamond of a class on the bundled representation.
diamonds::HodgeDiamond class_diamond(const DomainSpec& spec, const LeviClass& c,
                                     const std::vector<RatVec>& weights, int hodge_weight);

}  // namespace hp::psid
