#include "cvxtop/theorems.hpp"

#include <algorithm>
#include <sstream>

#include "cvxtop/errors.hpp"
#include "cvxtop/parameters.hpp"
#include "text_io.hpp"

namespace cvxtop {
namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

CheckReport over_budget(CheckReport r, const BudgetExceeded& info) {
  r.verdict = Verdict::budget;
  r.reason = "node budget exceeded";
  r.budget = info;
  return r;
}

std::vector<std::int64_t> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::int64_t decimal_digits(std::int64_t v) {
  std::int64_t d = 1;
  while (v >= 10) v /= 10, ++d;
  return d;
}

// Xi with Xi(1) = 1, used for table values; nullopt when the value surely
// exceeds `bound_digits` digits.
std::optional<BigInt> xi_bounded(std::int64_t r, std::size_t bound_digits) {
  if (r == 1) return BigInt(1);
  try {
    return xi(r, bound_digits);
  } catch (const SizeError&) {
    return std::nullopt;
  }
}

}  // namespace

int ceil_log2(std::int64_t r) {
  if (r < 1) throw InputError("ceil_log2: argument must be positive");
  int l = 0;
  while ((std::int64_t{1} << l) < r) ++l;
  return l;
}

BigInt xi(std::int64_t r, std::size_t max_digits) {
  if (r < 2) throw InputError("xi: r must be at least 2");
  const int l = ceil_log2(r);
  const BigInt exponent = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(l)) + BigInt(r) * l;
  // r >= 2^(l-1) and log10(2) > 3/10, so digits >= exponent * (l-1) * 3/10.
  const BigInt floor_digits = exponent * (l - 1) * 3 / 10;
  const auto too_big = [&] {
    return SizeError("xi(" + std::to_string(r) + ") exceeds " + std::to_string(max_digits) +
                     " decimal digits");
  };
  if (floor_digits > max_digits || exponent > std::numeric_limits<unsigned>::max()) throw too_big();
  BigInt value = boost::multiprecision::pow(BigInt(r), exponent.convert_to<unsigned>());
  if (value.str().size() > max_digits) throw too_big();
  return value;
}

const BigInt& PsiTable::at(std::int64_t t) const {
  auto it = std::upper_bound(steps.begin(), steps.end(), t,
                             [](std::int64_t x, const auto& row) { return x < row.first; });
  if (it == steps.begin()) throw InputError("psi table does not cover t = " + std::to_string(t));
  return std::prev(it)->second;
}

PsiTable parse_psi(std::istream& in) {
  PsiTable table;
  bool header = false;
  for (const auto& line : detail::read_lines(in)) {
    const auto& tok = line.tokens;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "t0") detail::fail(line.number, "expected 't0 <value>' header");
      table.t0 = detail::parse_int(tok[1], line.number);
      if (table.t0 < 1) detail::fail(line.number, "t0 must be positive");
      header = true;
      continue;
    }
    if (tok.size() != 2) detail::fail(line.number, "expected '<t> <value>'");
    const auto t = detail::parse_int(tok[0], line.number);
    if (!table.steps.empty() && t <= table.steps.back().first)
      detail::fail(line.number, "t values must be strictly increasing");
    if (tok[1].empty() || !std::all_of(tok[1].begin(), tok[1].end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      detail::fail(line.number, "expected a nonnegative integer value, got '" + tok[1] + "'");
    BigInt v(tok[1]);
    if (v < 1) detail::fail(line.number, "psi values must be positive");
    table.steps.emplace_back(t, std::move(v));
  }
  if (!header) throw InputError("psi table: missing 't0' header");
  if (table.steps.empty()) throw InputError("psi table: no rows");
  if (table.steps.front().first > table.t0) throw InputError("psi table does not cover t0");
  return table;
}

PsiTable parse_psi(const std::string& text) {
  std::istringstream in(text);
  return parse_psi(in);
}

PsiTable load_psi(const std::string& path) {
  auto in = detail::open_input(path);
  return parse_psi(in);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::budget: return "budget";
  }
  return "?";
}

const Quantity* CheckReport::find(const std::string& name) const {
  for (const auto& [k, v] : quantities)
    if (k == name) return &v;
  return nullptr;
}

CheckReport check_levi(const SetSystem& f, const SearchOptions& opts) {
  CheckReport r{"levi", {}, Verdict::holds, {}, {}, {}};
  auto h = helly(f, opts);
  if (!h) return over_budget(r, h.exceeded());
  auto rad = radon(f, opts);
  if (!rad) return over_budget(r, rad.exceeded());
  r.quantities = {{"helly", std::int64_t{*h}}, {"radon", std::int64_t{*rad}}};
  if (*h > *rad - 1) {
    r.verdict = Verdict::fails;
    r.reason = "helly exceeds radon - 1";
    r.witness = r.quantities;
  }
  return r;
}

CheckReport check_jamison(const SetSystem& f, int m, int n, const SearchOptions& opts) {
  if (m < 2 || n < 2) throw InputError("check_jamison: m and n must be at least 2");
  CheckReport r{"jamison", {}, Verdict::holds, {}, {}, {}};
  std::int64_t vals[3] = {};
  const int ks[3] = {m, n, m * n};
  for (int i = 0; i < 3; ++i) {
    auto v = partition_number(f, ks[i], opts);
    if (!v) return over_budget(r, v.exceeded());
    vals[i] = *v;
  }
  r.quantities = {{"m", std::int64_t{m}},
                  {"n", std::int64_t{n}},
                  {"rad_m", vals[0]},
                  {"rad_n", vals[1]},
                  {"rad_mn", vals[2]}};
  if (vals[2] > vals[0] * vals[1]) {
    r.verdict = Verdict::fails;
    r.reason = "rad_mn exceeds rad_m * rad_n";
    r.witness = r.quantities;
  }
  return r;
}

CheckReport check_graded_linear(const SetSystem& f, int t_max, const SearchOptions& opts) {
  CheckReport r{"graded-linear", {}, Verdict::holds, {}, {}, {}};
  auto prof = graded(f, GradedParameter::radon, t_max, std::nullopt, opts);
  if (!prof) return over_budget(r, prof.exceeded());
  r.quantities = {{"t_max", std::int64_t{t_max}}, {"radon_profile", widen(prof->values)}};
  for (int t = 1; t <= t_max; ++t)
    if (prof->at(t) > t + 1) {
      r.verdict = Verdict::fails;
      r.reason = "graded radon exceeds t + 1";
      r.witness = {{"t", std::int64_t{t}}, {"radon", std::int64_t{prof->at(t)}}};
      break;
    }
  return r;
}

CheckReport check_radongrowth(const SetSystem& f, int t_max, const SearchOptions& opts) {
  if (t_max < 2) throw InputError("check_radongrowth: t_max must be at least 2");
  CheckReport r{"radongrowth", {}, Verdict::holds, {}, {}, {}};
  auto rad = graded(f, GradedParameter::radon, t_max, std::nullopt, opts);
  if (!rad) return over_budget(r, rad.exceeded());
  auto h = graded(f, GradedParameter::helly, t_max, std::nullopt, opts);
  if (!h) return over_budget(r, h.exceeded());
  std::vector<std::int64_t> jumps;
  for (int t = 2; t <= t_max; ++t) {
    if (rad->at(t) <= rad->at(t - 1)) continue;
    jumps.push_back(t);
    const int n = rad->at(t - 1);
    const BigInt bound = (pow2(n - 1) - 1) * h->at(t);
    if (r.verdict == Verdict::holds && BigInt(t) > bound) {
      r.verdict = Verdict::fails;
      r.reason = "t exceeds (2^(n-1) - 1) * helly(t) at a jump";
      r.witness = {{"t", std::int64_t{t}}, {"n", std::int64_t{n}}, {"helly_t", std::int64_t{h->at(t)}}, {"bound", bound}};
    }
  }
  r.quantities = {{"radon_profile", widen(rad->values)},
                  {"helly_profile", widen(h->values)},
                  {"jumps", jumps}};
  return r;
}

CheckReport check_hellygrowth(const SetSystem& f, int t0, int t_max, const SearchOptions& opts) {
  CheckReport r{"hellygrowth", {}, Verdict::holds, {}, {}, {}};
  if (t0 < 1) throw InputError("check_hellygrowth: t0 must be at least 1");
  if (t0 >= t_max) {
    r.verdict = Verdict::not_applicable;
    r.reason = "empty hypothesis range: t0 >= t_max";
    r.witness = {{"t0", std::int64_t{t0}}, {"t_max", std::int64_t{t_max}}};
    return r;
  }
  auto h = graded(f, GradedParameter::helly, t_max, std::nullopt, opts);
  if (!h) return over_budget(r, h.exceeded());
  r.quantities = {{"t0", std::int64_t{t0}}, {"helly_profile", widen(h->values)}};
  for (int t = t0 + 1; t <= t_max; ++t)
    if (h->at(t) >= t) {
      r.verdict = Verdict::not_applicable;
      r.reason = "hypothesis helly(t) < t violated";
      r.witness = {{"t", std::int64_t{t}}, {"helly_t", std::int64_t{h->at(t)}}};
      return r;
    }
  for (int t = t0 + 1; t <= t_max; ++t)
    if (h->at(t) != h->at(t0 + 1) || h->at(t) > t0) {
      r.verdict = Verdict::fails;
      r.reason = "graded helly not constant and at most t0 past t0";
      r.witness = {{"t", std::int64_t{t}}, {"helly_t", std::int64_t{h->at(t)}}};
      break;
    }
  return r;
}

CheckReport holmsen_hypothesis(const SetSystem& f, int c, int ell, const SearchOptions& opts) {
  if (c < 1 || ell <= c) throw InputError("holmsen: requires ell > c >= 1");
  CheckReport r{"holmsen", {}, Verdict::holds, {}, {}, {}};
  const int t = c * ell;
  auto prof = graded(f, GradedParameter::colorful, t, c, opts);
  if (!prof) return over_budget(r, prof.exceeded());
  const int value = prof->at(t);
  r.quantities = {{"c", std::int64_t{c}},
                  {"ell", std::int64_t{ell}},
                  {"t", std::int64_t{t}},
                  {"colorful", std::int64_t{value}}};
  if (value > ell) {
    r.verdict = Verdict::fails;
    r.reason = "graded colorful number at c*ell exceeds ell";
    r.witness = {{"t", std::int64_t{t}}, {"colorful", std::int64_t{value}}};
  }
  return r;
}

CheckReport rg2_witness(const PsiTable& psi, std::int64_t t_max) {
  CheckReport r{"rg2-witness", {}, Verdict::holds, {}, {}, {}};
  const std::int64_t t0 = psi.t0;
  if (t_max < t0) throw InputError("rg2_witness: t_max is below t0");
  if (psi.steps.empty() || psi.steps.front().first > t0) throw InputError("psi table does not cover t0");
  const BigInt psi_t0 = psi.at(t0);
  r.quantities = {{"t0", t0}, {"t_max", t_max}, {"psi_t0", psi_t0}};

  struct Segment {
    std::int64_t lo, hi;  // inclusive, clipped to [t0, t_max]
    const BigInt* value;
  };
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < psi.steps.size(); ++i) {
    const std::int64_t next = i + 1 < psi.steps.size() ? psi.steps[i + 1].first - 1 : t_max;
    const std::int64_t lo = std::max(psi.steps[i].first, t0);
    const std::int64_t hi = std::min(next, t_max);
    if (lo <= hi) segments.push_back({lo, hi, &psi.steps[i].second});
  }
  // Side condition psi(t) < t + 1; on a constant segment the first t is the worst.
  for (const auto& s : segments)
    if (*s.value >= s.lo + 1) {
      r.verdict = Verdict::not_applicable;
      r.reason = "side condition psi(t) < t + 1 violated";
      r.witness = {{"t", s.lo}, {"psi_t", *s.value}};
      return r;
    }

  // t0^2 may overflow int64 only far past any realistic table range.
  const BigInt start_big = BigInt(t0) * t0;
  if (start_big > t_max) {
    r.verdict = Verdict::fails;
    r.reason = "no-witness-in-range";
    r.witness = {{"from", start_big}, {"to", t_max}};
    return r;
  }
  const std::int64_t start = start_big.convert_to<std::int64_t>();
  const auto bound_digits = static_cast<std::size_t>(decimal_digits(t_max) + 1);
  for (const auto& s : segments) {
    if (s.hi < start) continue;
    // Values beyond t_max fail the side condition, so this fits.
    auto x = xi_bounded(s.value->convert_to<std::int64_t>(), bound_digits);
    if (!x) continue;
    const BigInt threshold = *x * psi_t0;
    BigInt t1 = std::max<BigInt>({BigInt(s.lo), BigInt(start), threshold + 1});
    if (t1 > s.hi) continue;
    const auto t1v = t1.convert_to<std::int64_t>();
    r.quantities.emplace_back("t1", t1v);
    r.quantities.emplace_back("xi_psi_t1", *x);
    if (t1v == start) {
      r.reason = "witness at t1 = t0^2; the strict reading t1 > t0^2 excludes it";
      r.quantities.emplace_back("boundary", std::string("t1 = t0^2"));
    }
    return r;
  }
  r.verdict = Verdict::fails;
  r.reason = "no-witness-in-range";
  r.witness = {{"from", start_big}, {"to", t_max}};
  return r;
}

Budgeted<std::vector<GrowthEntry>> growth_diagnostic(const SetSystem& f, int t_max,
                                                     const SearchOptions& opts) {
  auto prof = graded(f, GradedParameter::radon, t_max, std::nullopt, opts);
  if (!prof) return prof.exceeded();
  std::vector<GrowthEntry> out;
  for (int t = 1; t <= t_max; ++t) {
    const BigInt lhs = pow2(prof->at(t));
    const int sign = lhs > t ? 1 : (lhs == t ? 0 : -1);
    out.push_back({t, prof->at(t), sign});
  }
  return out;
}

}  // namespace cvxtop
