#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "asynum/error.hpp"

namespace asynum {

/// Counts elementary steps for one call tree. Exhaustion is an error, never
/// a silent approximation. Safe to charge from several threads.
class WorkBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit WorkBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}
  WorkBudget(const WorkBudget& other) : limit_(other.limit_), used_(other.used()) {}
  WorkBudget& operator=(const WorkBudget& other) {
    limit_ = other.limit_;
    used_.store(other.used());
    return *this;
  }

  void charge(std::uint64_t steps = 1, const char* what = "computation") {
    const std::uint64_t total = used_.fetch_add(steps, std::memory_order_relaxed) + steps;
    if (total > limit_ || total < steps) {
      throw Error(ErrorCode::WorkBudgetExceeded,
                  std::string(what) + " exceeded the work budget of " + std::to_string(limit_) +
                      " steps");
    }
  }

  /// True if `steps` more would still fit; does not charge.
  bool fits(std::uint64_t steps) const { return steps <= limit_ && used() <= limit_ - steps; }

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace asynum
