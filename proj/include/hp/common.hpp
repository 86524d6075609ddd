#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hp {

// Error taxonomy shared by all modules.  The CLI maps these onto exit codes.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Signals that an input violates a structural invariant (bad diamond, parity
// mismatch, non-nilpotent matrix, ...).
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node budget for the combinatorial searches.  A single counter is threaded
// through enumerations so a runaway input fails fast instead of hanging.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw BudgetError("search budget exceeded (" + std::to_string(limit_) + " nodes)");
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

  static constexpr std::uint64_t kDefaultLimit = 5'000'000;

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace hp
