#pragma once

#include <array>
#include <optional>
#include <string>

#include "hp/rational.hpp"

namespace hp::g2model {

// Element of the (-1,-1) graded piece of the contact grading, written in the
// root-vector basis (X_{a2}, X_{a2+a1}, X_{a2+2a1}, X_{a2+3a1}), identified
// with binary cubics A0 x^3 + A1 x^2 y + A2 x y^2 + A3 y^3.
struct BinaryCubic {
  std::array<Rat, 4> a{Rat(0), Rat(0), Rat(0), Rat(0)};

  bool operator==(const BinaryCubic& o) const = default;
  bool is_zero() const;
  std::string to_string() const;
};

struct GL2Element {
  Rat a, b, c, d;
  Rat det() const { return a * d - b * c; }
};

// Substitution action (x,y) -> (a x + b y, c x + d y) on cubics; requires
// positive determinant.  Composes contravariantly: act(g, act(h, v)) equals
// act(h*g, v).
BinaryCubic act(const GL2Element& g, const BinaryCubic& v);

// The quartic cutting out the closure of the one-repeated-root orbit:
// (A2 A1 - 9 A0 A3)^2 = 4 (A2^2 - 3 A1 A3)(A1^2 - 3 A0 A2).
bool on_closure_surface(const BinaryCubic& v);

// defect = 4(A2^2-3A1A3)(A1^2-3A0A2) - (A2A1-9A0A3)^2; zero exactly on the surface
Rat surface_defect(const BinaryCubic& v);

// vanishing of the apolar pairing A0B3 - A1B2/3 + A2B1/3 - A3B0, which is
// the bracket obstruction in the ambient algebra
bool commutes(const BinaryCubic& v, const BinaryCubic& w);

enum class OrbitType { Zero, I, II, III };

// Zero; III off the closure surface; I on the perfect-cube locus (rank-one
// catalecticant); II otherwise.
OrbitType classify(const BinaryCubic& v);

std::string to_string(OrbitType t);

BinaryCubic generator(OrbitType t);  // canonical generator of I or II

// the y-free member of the type II family used in limiting arguments:
// X_{a2} - 3 t^2 X_{a2+2a1} - 2 t^3 X_{a2+3a1}
BinaryCubic family_n2(const Rat& t);

struct StrongVerdict {
  bool verdict = false;
  std::optional<std::pair<BinaryCubic, BinaryCubic>> witness;  // commuting independent pair
  std::string reason;
};

// Decides whether a 2-cube with the given nontrivial axis types admits
// independent commuting representatives whose positive span is type III.
StrongVerdict strong_2cube_verdict(OrbitType t1, OrbitType t2);

}  // namespace hp::g2model
