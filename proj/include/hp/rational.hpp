#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "hp/common.hpp"

namespace hp {

// All arithmetic in the library is exact.  Magnitudes stay tiny (root
// coordinates, intersection numbers, degree-4 polynomial coefficients), so a
// 64-bit rational is ample.
using Rat = boost::rational<long long>;

std::string to_string(const Rat& r);

// Parses "3", "-1/2", "9/4".
Rat parse_rational(const std::string& s);

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

std::string to_string(const RatVec& v);

// Solves a square system A x = b exactly.  Throws InvariantError when A is
// singular.
RatVec solve_linear(RatMat a, RatVec b);

// Inverse of a square rational matrix (InvariantError when singular).
RatMat invert(RatMat a);

// Rank by fraction-free (Bareiss) elimination after clearing denominators.
int rank_bareiss(const RatMat& a);

RatMat mat_mul(const RatMat& a, const RatMat& b);

bool is_zero(const RatMat& a);

// Univariate polynomial with rational coefficients, lowest degree first.
// Only what the sign analysis of the strong-admissibility witnesses needs.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

  static RatPoly constant(const Rat& r) { return RatPoly({r}); }
  static RatPoly variable() { return RatPoly({Rat(0), Rat(1)}); }

  const RatVec& coeffs() const { return c_; }
  bool zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;

  Rat eval(const Rat& x) const;

  // True when the polynomial is strictly positive on (0, inf), certified by
  // stripping the x^k factor and checking that all remaining coefficients are
  // nonnegative with at least one positive.  Sufficient for the frozen
  // witnesses; returns false when the certificate does not apply.
  bool certified_positive_on_positive_axis() const;

 private:
  void trim();
  RatVec c_;
};

}  // namespace hp
