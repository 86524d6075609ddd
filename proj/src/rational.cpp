#include "hp/rational.hpp"

#include <numeric>
#include <sstream>

namespace hp {

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad rational literal '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ConfigError("rational literal out of range '" + s + "'");
  }
}

std::string to_string(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

RatVec solve_linear(RatMat a, RatVec b) {
  const size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) throw InvariantError("solve_linear: matrix not square");
  if (b.size() != n) throw InvariantError("solve_linear: size mismatch");

  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw InvariantError("solve_linear: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

RatMat invert(RatMat a) {
  const size_t n = a.size();
  RatMat inv(n, RatVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw InvariantError("invert: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rat(0)) continue;
      Rat f = a[r][col];
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

int rank_bareiss(const RatMat& a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();

  // Clear denominators row by row; row scaling does not change rank.
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (size_t i = 0; i < rows; ++i) {
    long long lcm = 1;
    for (size_t j = 0; j < cols; ++j) lcm = std::lcm(lcm, a[i][j].denominator());
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].numerator() * (lcm / a[i][j].denominator());
  }

  int rank = 0;
  long long prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t r = row + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c)
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == Rat(0)) continue;
      for (size_t c = 0; c < m; ++c) out[i][c] += a[i][j] * b[j][c];
    }
  return out;
}

bool is_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != Rat(0)) return false;
  return true;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == Rat(0)) c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  RatVec out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  RatVec out(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RatPoly();
  RatVec out(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(out));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

bool RatPoly::certified_positive_on_positive_axis() const {
  if (c_.empty()) return false;
  size_t k = 0;
  while (k < c_.size() && c_[k] == Rat(0)) ++k;
  bool has_positive = false;
  for (size_t i = k; i < c_.size(); ++i) {
    if (c_[i] < Rat(0)) return false;
    if (c_[i] > Rat(0)) has_positive = true;
  }
  return has_positive;
}

}  // namespace hp
