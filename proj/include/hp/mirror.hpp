#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hp/diamonds.hpp"
#include "hp/rational.hpp"

namespace hp::mirror {

// Triple intersection numbers of divisor classes J_0..J_{r-2} on an elliptic
// fibration with section; fully symmetric in the indices.
struct IntersectionData {
  int r = 0;  // r-1 divisor generators
  std::map<std::array<int, 3>, Rat> triple;

  Rat c(int a, int b, int cidx) const;
  void set(int a, int b, int cidx, const Rat& v);

  static IntersectionData load(const std::string& path);
  static IntersectionData cy_fixture();  // r = 3: c000=9, c001=3, c011=1, c111=0
};

// Monodromy logarithm N_j in the basis (X; J_0..J_{r-2}; C_0..C_{r-2}; p),
// dimension 2r.
RatMat build_Nj(const IntersectionData& data, int j);

// The degree-block pairing the logarithms are skew for; dimension 2r.
RatMat pairing_matrix(int r);

// (rk M, rk M^2, rk M^3); input must be nilpotent of order <= 4
std::array<int, 3> rank_profile_matrix(const RatMat& m);

// Unique diamond class with matching rank profile, by name; throws
// InvariantError listing the candidates when the profile is ambiguous.
std::string classify_type(const std::array<int, 3>& profile, const diamonds::HodgeNumbers& h);

}  // namespace hp::mirror
