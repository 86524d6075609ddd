#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hp/common.hpp"

namespace hp::diamonds {

// Hodge numbers h^{p,n-p} of a weight-n polarized Hodge structure, indexed by
// p = 0..n.  Entries may vanish (derived sub-domains routinely have gaps).
struct HodgeNumbers {
  int weight = 0;
  std::vector<int> h;

  int dim() const;
  void validate() const;  // symmetry h^p = h^{n-p}, dim >= 1
};

// Finitely supported dimension function i^{p,q} of a limiting mixed Hodge
// structure; one full-group conjugacy class of R-split degenerations.
struct HodgeDiamond {
  int weight = 0;
  std::map<std::pair<int, int>, int> entries;  // only positive values stored

  int at(int p, int q) const;
  int total() const;
  bool operator==(const HodgeDiamond& o) const = default;
  bool operator<(const HodgeDiamond& o) const;  // lex on flattened p-major vector
  std::string to_string() const;
};

// Per-weight primitive dimensions j^{p,q}: for the string of weight n+k the
// map lives on p+q = n+k.
struct PrimitiveSubDiamond {
  int weight = 0;                                         // ambient weight n
  std::map<int, std::map<std::pair<int, int>, int>> by_k;  // k -> {(p,q) -> j}

  // Jordan string count of length k+1.
  int string_count(int k) const;
  bool operator==(const PrimitiveSubDiamond& o) const = default;
};

bool check_diamond(const HodgeDiamond& d, const HodgeNumbers& h);

// All diamonds for h in lexicographic order on the flattened p-major entry
// vector.  The pure (trivial) diamond is always present.
std::vector<HodgeDiamond> enumerate_diamonds(const HodgeNumbers& h, Budget* budget = nullptr);

HodgeDiamond pure_diamond(const HodgeNumbers& h);

PrimitiveSubDiamond primitive_decomposition(const HodgeDiamond& d);

HodgeDiamond reconstruct(const PrimitiveSubDiamond& p);

// (rk N, rk N^2, ..., rk N^n).
std::vector<int> rank_profile(const HodgeDiamond& d);

// Paper-convention class names for the bundled families ((g,g), (1,m,1),
// (2,m,2), (1,m,m,1), weight-7 (1,...,1)); positional "Dk" otherwise.
std::vector<std::string> class_names(const HodgeNumbers& h, const std::vector<HodgeDiamond>& ds);

// Named diamond of a bundled family, if the family and name are known.
std::optional<HodgeDiamond> named_diamond(const HodgeNumbers& h, const std::string& name);

}  // namespace hp::diamonds
