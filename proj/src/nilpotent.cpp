#include "hp/nilpotent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hp::nilpotent {

FormType form_for_weight(int weight) {
  return (weight % 2 == 1) ? FormType::Symplectic : FormType::Orthogonal;
}

namespace {
int sign_rank(Sign s) { return s == Sign::Plus ? 0 : (s == Sign::Minus ? 1 : 2); }
}  // namespace

void SignedYoungDiagram::normalize() {
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.length != b.length) return a.length > b.length;
    return sign_rank(a.first) < sign_rank(b.first);
  });
}

int SignedYoungDiagram::total_boxes() const {
  int t = 0;
  for (auto& r : rows) t += r.length;
  return t;
}

bool SignedYoungDiagram::operator<(const SignedYoungDiagram& o) const {
  auto key = [](const Row& r) { return std::pair{-r.length, sign_rank(r.first)}; };
  return std::lexicographical_compare(rows.begin(), rows.end(), o.rows.begin(), o.rows.end(),
                                      [&](const Row& a, const Row& b) { return key(a) < key(b); });
}

std::string SignedYoungDiagram::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << rows[i].length << ":" << static_cast<char>(rows[i].first);
  }
  return os.str();
}

int SignedYoungDiagram::rank_power(int l) const {
  int rk = 0;
  for (auto& r : rows) rk += std::max(r.length - l, 0);
  return rk;
}

int SignedYoungDiagram::sign_tail(int l) const {
  int s = 0;
  for (auto& r : rows) {
    if (r.length <= l || r.first == Sign::Unsigned) continue;
    s += (r.first == Sign::Plus) ? 1 : -1;
  }
  return s;
}

void SignedYoungDiagram::validate() const {
  std::map<int, int> unsigned_mult;
  for (auto& r : rows) {
    if (r.length <= 0) throw InvariantError("diagram row with nonpositive length");
    const bool even_len = r.length % 2 == 0;
    const bool should_sign = (form == FormType::Symplectic) ? even_len : !even_len;
    if (should_sign && r.first == Sign::Unsigned)
      throw InvariantError("row of length " + std::to_string(r.length) + " must carry a sign");
    if (!should_sign && r.first != Sign::Unsigned)
      throw InvariantError("row of length " + std::to_string(r.length) + " must be unsigned");
    if (!should_sign) unsigned_mult[r.length]++;
  }
  for (auto& [len, mult] : unsigned_mult)
    if (mult % 2 != 0)
      throw InvariantError("unsigned rows of length " + std::to_string(len) + " must come in pairs");
}

SignedYoungDiagram diamond_to_diagram(const diamonds::HodgeDiamond& d, FormType f) {
  if (form_for_weight(d.weight) != f) throw InvariantError("form type does not match the weight parity");
  auto prim = diamonds::primitive_decomposition(d);
  const int n = d.weight;
  SignedYoungDiagram out;
  out.form = f;
  for (auto& [k, layer] : prim.by_k)
    for (auto& [pq, j] : layer) {
      auto [p, q] = pq;
      if (p < q) continue;  // handle each conjugate pair once
      if ((p - q) % 2 == 0) {
        // signed strings; the first-box sign composes the string-depth
        // alternation with the Weil positivity of the primitive (p,q) piece
        int exp = k / 2 + (p - q) / 2;
        Sign s = (exp % 2 == 0) ? Sign::Plus : Sign::Minus;
        int count = (p == q) ? j : 2 * j;
        for (int i = 0; i < count; ++i) out.rows.push_back({k + 1, s});
      } else {
        for (int i = 0; i < 2 * j; ++i) out.rows.push_back({k + 1, Sign::Unsigned});
      }
    }
  out.normalize();
  out.validate();
  return out;
}

bool closure_leq(const SignedYoungDiagram& y1, const SignedYoungDiagram& y2) {
  if (y1.form != y2.form) throw InvariantError("closure_leq: mismatched form types");
  if (y1.total_boxes() != y2.total_boxes()) throw InvariantError("closure_leq: mismatched box counts");

  const int maxlen = std::max(y1.rows.empty() ? 0 : y1.rows[0].length,
                              y2.rows.empty() ? 0 : y2.rows[0].length);

  // rank conditions (dominance of the unsigned partitions)
  for (int l = 1; l <= maxlen; ++l)
    if (y1.rank_power(l) > y2.rank_power(l)) return false;

  // signature conditions: for each l of the parity making Q(., N^l .)
  // symmetric, the index pair of that form can only drop under degeneration
  const int start = (y1.form == FormType::Orthogonal) ? 0 : 1;
  for (int l = start; l <= maxlen; l += 2) {
    int pref = ((l / 2) % 2 == 0) ? 1 : -1;
    int sig1 = pref * y1.sign_tail(l), sig2 = pref * y2.sign_tail(l);
    int r1 = y1.rank_power(l), r2 = y2.rank_power(l);
    // (rank + sig)/2 and (rank - sig)/2 are the positive/negative indices
    if (r1 + sig1 > r2 + sig2) return false;
    if (r1 - sig1 > r2 - sig2) return false;
  }
  return true;
}

bool within_validated_envelope(const diamonds::HodgeNumbers& h) {
  const auto& v = h.h;
  if (h.weight == 1 && v.size() == 2 && v[0] == v[1]) return true;
  if (h.weight == 2 && v.size() == 3 && v[0] == 1 && v[2] == 1) return true;
  if (h.weight == 2 && v.size() == 3 && v[0] == 2 && v[2] == 2 && v[1] >= 4) return true;
  if (h.weight == 3 && v.size() == 4 && v[0] == 1 && v[3] == 1 && v[1] == v[2]) return true;
  return false;
}

std::vector<std::vector<int>> pi_fibers(const diamonds::HodgeNumbers& h) {
  auto ds = diamonds::enumerate_diamonds(h);
  FormType f = form_for_weight(h.weight);
  std::map<SignedYoungDiagram, std::vector<int>> groups;
  for (size_t i = 0; i < ds.size(); ++i) groups[diamond_to_diagram(ds[i], f)].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [dia, idxs] : groups) out.push_back(idxs);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hp::nilpotent
