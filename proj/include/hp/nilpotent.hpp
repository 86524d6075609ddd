#pragma once

#include <string>
#include <vector>

#include "hp/diamonds.hpp"

namespace hp::nilpotent {

// Weight parity fixes the bilinear form: odd weight pairs antisymmetrically
// (symplectic), even weight symmetrically (orthogonal).
enum class FormType { Symplectic, Orthogonal };

FormType form_for_weight(int weight);

enum class Sign : char { Plus = '+', Minus = '-', Unsigned = 'u' };

struct Row {
  int length = 0;
  Sign first = Sign::Unsigned;
  auto operator<=>(const Row&) const = default;
};

// A nilpotent conjugacy class of the full automorphism group: a partition
// with alternating signs on the rows of the parity matched to the form.
struct SignedYoungDiagram {
  FormType form = FormType::Symplectic;
  std::vector<Row> rows;  // kept sorted: length desc, then sign order +,-,u

  void normalize();
  int total_boxes() const;
  bool operator==(const SignedYoungDiagram& o) const = default;
  bool operator<(const SignedYoungDiagram& o) const;
  std::string to_string() const;  // e.g. "3:-,3:-,1:+,1:u,1:u"

  // rk N^l of any representative
  int rank_power(int l) const;
  // sum of first-box signs over signed rows of length > l
  int sign_tail(int l) const;
  // validity against the form-type conventions
  void validate() const;
};

// Diagram of the conjugacy class of N for a class with the given diamond.
SignedYoungDiagram diamond_to_diagram(const diamonds::HodgeDiamond& d, FormType f);

// Closure order on nilpotent classes at the full-group level, computed from
// rank and truncated-signature data of the diagrams (see README).  Exact on
// the bundled families; heuristic outside them.
bool closure_leq(const SignedYoungDiagram& y1, const SignedYoungDiagram& y2);

// Whether h belongs to one of the families the closure criterion is gated
// against.  Callers surface a heuristic flag otherwise.
bool within_validated_envelope(const diamonds::HodgeNumbers& h);

// Fibers of the diamond -> diagram map: indices into enumerate_diamonds(h)
// grouped by equal diagram.
std::vector<std::vector<int>> pi_fibers(const diamonds::HodgeNumbers& h);

}  // namespace hp::nilpotent
