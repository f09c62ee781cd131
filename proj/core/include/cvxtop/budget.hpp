#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace cvxtop {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Node counter for the exhaustive searches. Every search charges one unit
/// per visited node; once the limit is passed the search stops and reports
/// BudgetExceeded instead of a value.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  /// Charges `n` nodes. Returns false if the budget is now exhausted.
  bool spend(std::uint64_t n = 1) {
    used_ += n;
    return used_ <= limit_;
  }

  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t remaining() const { return exhausted() ? 0 : limit_ - used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Knobs shared by every budgeted computation.
struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  // Worker threads for embarrassingly parallel loops. Results never depend
  // on this value.
  unsigned threads = 1;
};

struct BudgetExceeded {
  std::uint64_t nodes_explored = 0;
  // Best value proven so far, when the search has one.
  std::optional<std::int64_t> lower_bound;
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(BudgetExceeded info)
      : std::runtime_error("node budget exceeded after " +
                           std::to_string(info.nodes_explored) + " nodes"),
        info_(info) {}
  const BudgetExceeded& info() const { return info_; }

 private:
  BudgetExceeded info_;
};

/// Either a computed value or an explicit budget outcome. Never a truncated
/// value.
template <typename T>
class Budgeted {
 public:
  Budgeted(T value) : state_(std::move(value)) {}  // NOLINT(implicit)
  Budgeted(BudgetExceeded over) : state_(over) {}  // NOLINT(implicit)

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw BudgetExceededError(exceeded());
    return std::get<T>(state_);
  }
  // By value, so `for (x : f().value())` does not dangle.
  T value() && {
    if (!ok()) throw BudgetExceededError(exceeded());
    return std::get<T>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const BudgetExceeded& exceeded() const { return std::get<BudgetExceeded>(state_); }

 private:
  std::variant<T, BudgetExceeded> state_;
};

}  // namespace cvxtop
