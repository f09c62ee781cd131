// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cvxtop/chain_map.hpp"
#include "cvxtop/corpus.hpp"
#include "cvxtop/homology.hpp"
#include "cvxtop/parameters.hpp"
#include "cvxtop/theorems.hpp"
#include "fixtures.hpp"

using namespace cvxtop;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string(bool&)>& body) {
  bool ok = true;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s [%2d] %s (%s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
}

// 500 systems with ground 1..6 and 0..6 members.
std::vector<SetSystem> corpus(std::uint64_t seed, int count, int max_ground, int max_members) {
  std::mt19937_64 rng(seed);
  std::vector<SetSystem> out;
  for (int i = 0; i < count; ++i) {
    const int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_ground));
    const int m = static_cast<int>(rng() % static_cast<std::uint64_t>(max_members + 1));
    out.push_back(random_system(rng, g, m));
  }
  return out;
}

std::vector<SetSystem> curated() { return {fixtures::star(), fixtures::intervals(3), fixtures::intervals(4), fixtures::single()}; }

std::string run_cli_capture(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "cvxtop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

}  // namespace

int main() {
  const auto main_corpus = corpus(20260101, 500, 6, 6);

  criterion(1, "helly equals largest minimal obstruction on 500 random systems", [&](bool& ok) {
    const auto start = Clock::now();
    int mismatches = 0;
    for (const auto& f : main_corpus) {
      const int h = helly(f).value();
      int largest = 0;
      for (const auto& o : minimal_obstructions(f).value()) largest = std::max(largest, o.members.size());
      const int expected = f.size() == 0 ? 0 : std::max(1, largest);
      mismatches += h != expected;
    }
    const double secs = seconds_since(start);
    ok = mismatches == 0 && secs < 60;
    return std::to_string(mismatches) + " mismatches, " + std::to_string(secs) + " s";
  });

  criterion(2, "Levi inequality helly <= radon - 1 on corpus and curated systems", [&](bool& ok) {
    int fails = 0, total = 0;
    auto all = main_corpus;
    for (auto& f : curated()) all.push_back(f);
    for (const auto& f : all) {
      ++total;
      fails += check_levi(f).verdict != Verdict::holds;
    }
    ok = fails == 0;
    return std::to_string(fails) + " failures of " + std::to_string(total);
  });

  criterion(3, "graded radon <= t + 1; gen-corpus star reaches n + 1 at t = n", [&](bool& ok) {
    int fails = 0;
    for (const auto& f : main_corpus) {
      if (f.size() == 0) continue;
      const auto prof = graded(f, GradedParameter::radon, f.size()).value();
      for (int t = 1; t <= f.size(); ++t) fails += prof.at(t) > t + 1;
    }
    const auto dir = fs::temp_directory_path() / "cvxtop_acceptance_star";
    std::string stars;
    for (int n = 3; n <= 5; ++n) {
      int code = 0;
      run_cli_capture({"gen-corpus", "--kind", "star", "--ground", std::to_string(n), "--out", dir.string()}, code);
      const auto f = load_set_system((dir / ("star_" + std::to_string(n) + ".ss")).string());
      const int at_n = graded(f, GradedParameter::radon, n).value().at(n);
      stars += " rad(" + std::to_string(n) + ")=" + std::to_string(at_n);
      ok = ok && code == 0 && f.size() == n && at_n == n + 1;
    }
    ok = ok && fails == 0;
    return std::to_string(fails) + " violations;" + stars;
  });

  criterion(4, "radongrowth integer form at every jump; star tight at t = 3", [&](bool& ok) {
    int fails = 0;
    for (const auto& f : main_corpus) fails += check_radongrowth(f, std::max(2, f.size())).verdict != Verdict::holds;
    const auto star = check_radongrowth(fixtures::star(), 3);
    const auto rad = std::get<std::vector<std::int64_t>>(*star.find("radon_profile"));
    const auto hel = std::get<std::vector<std::int64_t>>(*star.find("helly_profile"));
    const std::int64_t n = rad[1];
    const std::int64_t bound = ((std::int64_t{1} << (n - 1)) - 1) * hel[2];
    ok = fails == 0 && star.verdict == Verdict::holds && rad[2] > rad[1] && bound == 3;
    return std::to_string(fails) + " failures; star: 3 <= (2^" + std::to_string(n - 1) + "-1)*" +
           std::to_string(hel[2]) + " = " + std::to_string(bound);
  });

  criterion(5, "partition_number(F,2) = radon, Jamison for m = n = 2, {X} gives k", [&](bool& ok) {
    const auto small = corpus(77, 200, 4, 4);
    int eq_fail = 0, jam_fail = 0;
    for (const auto& f : small) {
      eq_fail += partition_number(f, 2).value() != radon(f).value();
      jam_fail += check_jamison(f, 2, 2).verdict != Verdict::holds;
    }
    std::string ks;
    for (int k = 2; k <= 4; ++k) {
      const int v = partition_number(fixtures::single(), k).value();
      ks += " " + std::to_string(v);
      ok = ok && v == k;
    }
    ok = ok && eq_fail == 0 && jam_fail == 0;
    return std::to_string(eq_fail) + " k=2 mismatches, " + std::to_string(jam_fail) + " Jamison failures; {X}:" + ks;
  });

  criterion(6, "reduced Betti numbers of sphere/RP2/torus; Euler identity on 200 complexes", [&](bool& ok) {
    const auto start = Clock::now();
    const auto b = [](const char* name) { return reduced_betti(fixtures::complex_file(name)).values; };
    ok = b("boundary_triangle.sc") == std::vector<int>{0, 1} && b("boundary_tetrahedron.sc") == std::vector<int>{0, 0, 1} &&
         b("rp2_6.sc") == std::vector<int>{0, 1, 1} && b("torus_7.sc") == std::vector<int>{0, 2, 1};
    std::mt19937_64 rng(6);
    int euler_fail = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const auto k = fixtures::random_complex(rng, n, 1 + static_cast<int>(rng() % 8), 5);
      const auto betti = reduced_betti(k);
      const auto f = k.f_vector();
      int lhs = -1, rhs = 0;
      for (std::size_t d = 0; d < f.size(); ++d) lhs += (d % 2 ? -1 : 1) * static_cast<int>(f[d]);
      for (std::size_t d = 0; d < betti.values.size(); ++d) rhs += (d % 2 ? -1 : 1) * betti.values[d];
      euler_fail += lhs != rhs;
    }
    const double secs = seconds_since(start);
    ok = ok && euler_fail == 0 && secs < 10;
    return std::to_string(euler_fail) + " Euler failures, " + std::to_string(secs) + " s";
  });

  criterion(7, "K4 -> 4-vertex disk found; K5 -> every bundled disk exhausted", [&](bool& ok) {
    const auto start = Clock::now();
    const auto k4 = fixtures::complex_file("k4.sc");
    const auto k5 = fixtures::complex_file("k5.sc");
    const auto found = search_hae(k4, fixtures::complex_file("disk4.sc"));
    ok = found.tag == SearchOutcome::Tag::found && found.map && verify_hae(*found.map).ok();
    std::vector<fs::path> disks;
    for (const auto& e : fs::directory_iterator(fixtures::data("disks")))
      if (e.path().extension() == ".sc") disks.push_back(e.path());
    std::sort(disks.begin(), disks.end());
    int exhausted = 0;
    std::uint64_t nodes = 0;
    for (const auto& d : disks) {
      const auto res = search_hae(k5, load_complex(d.string()));
      exhausted += res.tag == SearchOutcome::Tag::exhausted_none;
      nodes = std::max(nodes, res.nodes_explored);
    }
    const double secs = seconds_since(start);
    ok = ok && !disks.empty() && exhausted == static_cast<int>(disks.size()) && secs < 300;
    return std::to_string(exhausted) + "/" + std::to_string(disks.size()) + " disks exhausted, max " +
           std::to_string(nodes) + " nodes, " + std::to_string(secs) + " s";
  });

  criterion(8, "exact Xi values and the rg2 witness 43046722", [&](bool& ok) {
    const auto psi = load_psi(fixtures::data("psi/const3.psi"));
    const auto r = rg2_witness(psi, 50'000'000);
    const auto* t1 = r.find("t1");
    ok = xi(2) == 16 && xi(3) == 14348907 && xi(4) == BigInt("281474976710656") && t1 &&
         std::get<std::int64_t>(*t1) == 43046722;
    return "xi(4) = " + xi(4).str() + ", t1 = " + (t1 ? std::to_string(std::get<std::int64_t>(*t1)) : "none");
  });

  criterion(9, "shatter [1,1] at h = 1; level 0 at h = 1 and 1 at h = 2", [&](bool& ok) {
    const auto fam = load_family(fixtures::data("complexes/circle_family.scf"));
    const auto s = shatter(fam, 1, 2).value().values;
    const int l1 = level_complexity(fam, 1).value();
    const int l2 = level_complexity(fam, 2).value();
    ok = s == std::vector<int>{1, 1} && l1 == 0 && l2 == 1;
    return "shatter [" + std::to_string(s.at(0)) + "," + std::to_string(s.at(1)) + "], level " +
           std::to_string(l1) + "/" + std::to_string(l2);
  });

  criterion(10, "structured output byte-identical across runs and thread counts", [&](bool& ok) {
    const auto sys = fixtures::data("systems/intervals3.ss");
    const auto star = fixtures::data("systems/star.ss");
    const auto fam = fixtures::data("complexes/circle_family.scf");
    const auto dir = (fs::temp_directory_path() / "cvxtop_acceptance_det").string();
    const std::vector<std::vector<std::string>> cases = {
        {"helly", "--input", sys},
        {"radon", "--input", sys},
        {"obstructions", "--input", sys},
        {"graded", "--input", sys, "--param", "helly", "--t", "6"},
        {"graded", "--input", sys, "--param", "radon", "--t", "6"},
        {"graded", "--input", sys, "--param", "colorful", "--t", "4", "--c", "2"},
        {"partition", "--input", star, "--k", "3"},
        {"colorful", "--input", star},
        {"fh-profile", "--input", sys, "--s", "3", "--c", "2"},
        {"betti", "--input", fixtures::data("complexes/torus_7.sc")},
        {"shatter", "--input", fam, "--h", "1", "--k", "2"},
        {"level", "--input", fam, "--h", "2"},
        {"mu", "--input", fixtures::data("complexes/k5.sc")},
        {"skeleton", "--n", "4", "--k", "2"},
        {"search-hae", "--k", fixtures::data("complexes/k4.sc"), "--l", fixtures::data("complexes/disk4.sc")},
        {"search-hae", "--k", fixtures::data("complexes/k5.sc"), "--l", fixtures::data("disks/disk_v6_00.sc")},
        {"xi", "--r", "5"},
        {"check", "--suite", "levi", "--input", sys},
        {"check", "--suite", "jamison", "--input", star},
        {"check", "--suite", "radongrowth", "--input", sys},
        {"check", "--suite", "holmsen", "--input", sys, "--c", "2", "--ell", "3"},
        {"rg2-witness", "--psi", fixtures::data("psi/const3.psi"), "--tmax", "50000000"},
        {"diagnose-growth", "--input", sys, "--t", "6"},
        {"gen-corpus", "--seed", "9", "--count", "20", "--ground", "6", "--members", "6", "--out", dir},
    };
    int differing = 0;
    for (auto args : cases) {
      args.insert(args.begin(), {"--format", "jsonl"});
      auto one = args, many = args;
      one.insert(one.end(), {"--threads", "1"});
      many.insert(many.end(), {"--threads", "8"});
      int c1 = 0, c2 = 0, c3 = 0;
      const auto a = run_cli_capture(one, c1);
      const auto b = run_cli_capture(one, c2);
      const auto c = run_cli_capture(many, c3);
      if (a != b || a != c || a.empty() || c1 != c2 || c1 != c3) ++differing;
    }
    ok = differing == 0;
    return std::to_string(cases.size()) + " commands, " + std::to_string(differing) + " differing";
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
