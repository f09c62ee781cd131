#pragma once

// Finite checks of the inequalities relating the convexity parameters, the
// tower function Xi, and the witness finder for the t1 threshold.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cvxtop/budget.hpp"
#include "cvxtop/set_system.hpp"

namespace cvxtop {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kXiMaxDigits = 100'000;

/// Least L with 2^L >= r (r >= 1).
int ceil_log2(std::int64_t r);

/// r^(r^L + r*L) with L = ceil_log2(r). Throws InputError for r < 2 and
/// SizeError when the decimal expansion would exceed `max_digits`.
BigInt xi(std::int64_t r, std::size_t max_digits = kXiMaxDigits);

/// Step-function table: row (t, v) sets the value v on [t, next row's t);
/// the last row extends indefinitely.
struct PsiTable {
  std::int64_t t0 = 0;
  std::vector<std::pair<std::int64_t, BigInt>> steps;

  /// Throws InputError when t precedes the first row.
  const BigInt& at(std::int64_t t) const;
};

PsiTable parse_psi(std::istream& in);
PsiTable parse_psi(const std::string& text);
PsiTable load_psi(const std::string& path);

enum class Verdict { holds, fails, not_applicable, budget };
const char* to_string(Verdict v);

using Quantity = std::variant<std::int64_t, BigInt, std::vector<std::int64_t>, std::string>;
using Named = std::vector<std::pair<std::string, Quantity>>;

struct CheckReport {
  std::string check;
  Named quantities;
  Verdict verdict = Verdict::holds;
  std::string reason;
  Named witness;  // set for fails and not_applicable
  std::optional<BudgetExceeded> budget;

  const Quantity* find(const std::string& name) const;
};

CheckReport check_levi(const SetSystem& f, const SearchOptions& opts = {});
CheckReport check_jamison(const SetSystem& f, int m, int n, const SearchOptions& opts = {});
/// Graded Radon number at most t + 1 for t = 1..t_max.
CheckReport check_graded_linear(const SetSystem& f, int t_max, const SearchOptions& opts = {});
CheckReport check_radongrowth(const SetSystem& f, int t_max, const SearchOptions& opts = {});
CheckReport check_hellygrowth(const SetSystem& f, int t0, int t_max, const SearchOptions& opts = {});
CheckReport holmsen_hypothesis(const SetSystem& f, int c, int ell, const SearchOptions& opts = {});
CheckReport rg2_witness(const PsiTable& psi, std::int64_t t_max);

struct GrowthEntry {
  int t = 0;
  int radon = 0;
  int sign = 0;  // sign of 2^radon - t
  bool operator==(const GrowthEntry&) const = default;
};

Budgeted<std::vector<GrowthEntry>> growth_diagnostic(const SetSystem& f, int t_max,
                                                     const SearchOptions& opts = {});

}  // namespace cvxtop
