#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace wtds {

struct BoundCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool satisfied = true;
};

/// Records evaluated inequalities `lhs <= rhs`. A failed `require` is recorded
/// and then thrown as InvariantViolation.
class BoundLedger {
 public:
  void require(std::string name, std::int64_t lhs, std::int64_t rhs) {
    const bool ok = lhs <= rhs;
    entries_.push_back({name, lhs, rhs, ok});
    if (!ok)
      throw InvariantViolation("bound violated: " + name + " (" + std::to_string(lhs) +
                               " > " + std::to_string(rhs) + ")");
  }

  void append(const BoundLedger& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  const std::vector<BoundCheck>& entries() const { return entries_; }

  bool all_satisfied() const {
    for (const auto& e : entries_)
      if (!e.satisfied) return false;
    return true;
  }

  const BoundCheck* find(const std::string& name) const {
    for (const auto& e : entries_)
      if (e.name == name) return &e;
    return nullptr;
  }

 private:
  std::vector<BoundCheck> entries_;
};

// Closed-form bounds, shared by the pipeline and the tests.
namespace bound {

inline std::int64_t fvs(std::int64_t k) { return 2 * k; }
inline std::int64_t q(std::int64_t k) { return 4 * k * k; }
inline std::int64_t q_hat(std::int64_t k) { return 8 * k * k; }
inline std::int64_t c_m(std::int64_t k) { return 8 * k * k + 2 * k; }
inline std::int64_t c_g(std::int64_t k) {
  return 160 * k * k * k * k + 248 * k * k * k + 80 * k * k - 16 * k - 8;
}
inline std::int64_t c_2(std::int64_t k) { return 8 * k * k - 1; }
inline std::int64_t component(std::int64_t k) { return 8 * k + 8; }
inline std::int64_t i_neighbors(std::int64_t k) { return 2 * k + 1; }
inline std::int64_t i_kept(std::int64_t k) { return 8 * k * k * k + 10 * k * k + 3 * k + 1; }

}  // namespace bound

}  // namespace wtds
