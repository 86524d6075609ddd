#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hp/rational.hpp"

namespace hp::rootsys {

// Root coordinates in the simple-root basis.
using Root = std::vector<int>;

// A covector on the Cartan subalgebra in the basis {S^1,...,S^r} dual to the
// simple roots, so alpha_i(v) = coords[i] for the simple root alpha_i.
struct GradingVector {
  RatVec coords;
  bool operator==(const GradingVector& o) const = default;
};

// Pairing alpha(v) for a root alpha in simple-root coordinates.
Rat pair_root(const Root& alpha, const GradingVector& v);

struct LeviSubsystem {
  std::vector<Root> roots;        // closed under negation, sorted
  std::vector<Root> simpleRoots;  // indecomposable positive members
  bool operator==(const LeviSubsystem& o) const { return roots == o.roots; }
  bool operator<(const LeviSubsystem& o) const { return roots < o.roots; }
};

class RootSystem {
 public:
  // type: one of A,B,C,D (with 1 <= rank <= 8), E6, E7, E8, F4, G2.
  static RootSystem build(const std::string& type, int rank);
  static RootSystem build(const std::string& spec);  // "G2", "C4", ...

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  // positives followed by their negatives
  const std::vector<Root>& all_roots() const { return all_; }

  bool is_root(const Root& v) const;
  int root_index(const Root& v) const;  // index into all_roots(), -1 if absent

  Root simple_root(int i) const;

  // neither a+b nor a-b is a root; false on a = +-b
  bool strongly_orthogonal(const Root& a, const Root& b) const;

  // W-invariant symmetric form on the root space
  Rat inner(const Root& a, const Root& b) const;

  // coroot of beta as a vector in the S-basis: alpha(H_beta) = <alpha, beta^vee>
  GradingVector coroot(const Root& beta) const;

  // reflection s_beta as a permutation of all_roots()
  std::vector<int> reflection_perm(const Root& beta) const;

  // breadth-first closure of the given reflections (defaults to the simple
  // ones); permutations of all_roots()
  std::vector<std::vector<int>> weyl_group(std::uint64_t order_bound = 2'000'000) const;
  std::vector<std::vector<int>> subgroup(const std::vector<std::vector<int>>& generators,
                                         std::uint64_t order_bound = 2'000'000) const;

  // every subset of the form R  cap  span_Q(roots), including the empty one
  std::vector<LeviSubsystem> levi_subsystems() const;

  LeviSubsystem span_closure(const std::vector<Root>& gens) const;
  LeviSubsystem full_subsystem() const;

  // Z = 2 E^ss with E^ss the component of E in the coroot span of L
  GradingVector semisimple_projection(const LeviSubsystem& l, const GradingVector& e) const;

  // dim l_0 = dim l_2 and the 2-graded piece generates the positive part
  bool is_distinguished(const LeviSubsystem& l, const GradingVector& z) const;

  // fundamental weights expanded over the simple roots (rows)
  RatMat fundamental_weights() const;

  LeviSubsystem apply_perm(const std::vector<int>& perm, const LeviSubsystem& l) const;
  GradingVector apply_perm_to_vector(const std::vector<int>& perm, const GradingVector& v) const;

 private:
  std::string type_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
  std::map<Root, int> index_;
  RatMat bform_;  // (alpha_i, alpha_j)

  void finish();
};

}  // namespace hp::rootsys
