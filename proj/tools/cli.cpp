#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvxtop/chain_map.hpp"
#include "cvxtop/corpus.hpp"
#include "cvxtop/errors.hpp"
#include "cvxtop/homology.hpp"
#include "cvxtop/parameters.hpp"
#include "cvxtop/theorems.hpp"

namespace cvxtop {
namespace {

using json = nlohmann::ordered_json;

enum class Format { table, jsonl };

enum Exit { kOk = 0, kFails = 1, kInput = 2, kBudget = 3 };

struct Context {
  Format format = Format::table;
  SearchOptions opts;
  std::ostream* out = nullptr;
  std::string command;

  void emit(json record, const std::string& table) const {
    if (format == Format::jsonl) {
      json full = {{"command", command}};
      full.update(record);
      *out << full.dump() << '\n';
    } else {
      *out << table;
    }
  }
};

template <typename Set>
json indices(Set s) {
  return json(s.indices());
}

template <typename Set>
std::string show(Set s) {
  std::string r = "{";
  bool first = true;
  for (int i : s.indices()) {
    r += first ? "" : ",";
    r += std::to_string(i);
    first = false;
  }
  return r + "}";
}

template <typename T>
std::string show_list(const std::vector<T>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

json to_json(const Quantity& q) {
  return std::visit(
      [](const auto& v) -> json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, BigInt>)
          return v.str();
        else
          return v;
      },
      q);
}

std::string to_text(const Quantity& q) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, BigInt>)
          return v.str();
        else if constexpr (std::is_same_v<V, std::string>)
          return v;
        else if constexpr (std::is_same_v<V, std::int64_t>)
          return std::to_string(v);
        else
          return show_list(v);
      },
      q);
}

json to_json(const Named& named) {
  json obj = json::object();
  for (const auto& [k, v] : named) obj[k] = to_json(v);
  return obj;
}

json to_json(const Rational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  return {{"num", num.convert_to<std::int64_t>()}, {"den", den.convert_to<std::int64_t>()}};
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::holds:
    case Verdict::not_applicable: return kOk;
    case Verdict::fails: return kFails;
    case Verdict::budget: return kBudget;
  }
  return kOk;
}

int report(const Context& ctx, const CheckReport& r) {
  json rec = {{"check", r.check}, {"verdict", to_string(r.verdict)}};
  rec["quantities"] = to_json(r.quantities);
  if (!r.reason.empty()) rec["reason"] = r.reason;
  if (!r.witness.empty()) rec["witness"] = to_json(r.witness);
  if (r.budget) rec["nodes_explored"] = r.budget->nodes_explored;
  std::ostringstream t;
  t << "check: " << r.check << '\n';
  for (const auto& [k, v] : r.quantities) t << k << ": " << to_text(v) << '\n';
  t << "verdict: " << to_string(r.verdict) << '\n';
  if (!r.reason.empty()) t << "reason: " << r.reason << '\n';
  for (const auto& [k, v] : r.witness) t << "witness." << k << ": " << to_text(v) << '\n';
  ctx.emit(rec, t.str());
  return exit_for(r.verdict);
}

int scalar(const Context& ctx, const char* key, std::int64_t v) {
  ctx.emit({{key, v}}, std::to_string(v) + "\n");
  return kOk;
}

std::uint64_t default_budget() {
  const char* env = std::getenv("CVXTOP_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  std::uint64_t v = 0;
  std::string s(env);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0)
    throw InputError("CVXTOP_BUDGET must be a positive integer, got '" + s + "'");
  return v;
}

json chain_map_json(const ChainMap& f) {
  json faces = json::array();
  for (int d = 0; d <= f.source.dimension(); ++d) {
    const auto& src = f.source.faces(d);
    for (std::size_t i = 0; i < src.size(); ++i) {
      json img = json::array();
      for (Simplex s : f.images[static_cast<std::size_t>(d)][i].simplices) img.push_back(indices(s));
      faces.push_back({{"face", indices(src[i])}, {"image", img}});
    }
  }
  return faces;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convexity parameters of set systems and Z2 homology of complexes", "cvxtop"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.out = &out;
  std::string format = "table";
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  app.add_option("--format", format, "Output mode")->check(CLI::IsMember({"table", "jsonl"}));
  app.add_option("--budget", budget, "Node budget (default 10^7 or $CVXTOP_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads; results do not depend on it")
      ->check(CLI::Range(1u, 256u));

  std::map<std::string, std::function<int()>> handlers;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    return s;
  };

  std::string input;
  auto need_input = [&](CLI::App* s, const std::string& what) {
    s->add_option("--input", input, what)->required()->check(CLI::ExistingFile);
  };

  // Set-system parameters.
  need_input(sub("helly", "Helly number"), "Set system (.ss)");
  handlers["helly"] = [&] { return scalar(ctx, "helly", helly(load_set_system(input), ctx.opts).value()); };

  need_input(sub("radon", "Radon number"), "Set system (.ss)");
  handlers["radon"] = [&] {
    const auto f = load_set_system(input);
    const int r = radon(f, ctx.opts).value();
    const ElementSet w = radon_witness(f, ctx.opts).value();
    ctx.emit({{"radon", r}, {"witness", indices(w)}}, std::to_string(r) + "\n");
    return kOk;
  };

  need_input(sub("obstructions", "Inclusion-minimal non-cliques"), "Set system (.ss)");
  handlers["obstructions"] = [&] {
    const auto obs = minimal_obstructions(load_set_system(input), ctx.opts).value();
    json list = json::array();
    std::string table;
    for (const auto& o : obs) {
      list.push_back(indices(o.members));
      table += show(o.members) + "\n";
    }
    ctx.emit({{"count", obs.size()}, {"obstructions", list}}, table);
    return kOk;
  };

  std::string param = "helly";
  int t = 0;
  std::optional<int> c;
  {
    auto* s = sub("graded", "Graded parameter profile for t = 1..T");
    need_input(s, "Set system (.ss)");
    s->add_option("--param", param)->check(CLI::IsMember({"helly", "radon", "colorful"}));
    s->add_option("--t", t, "Largest subfamily size")->required()->check(CLI::PositiveNumber);
    s->add_option("--c", c, "Arity for the colorful parameter (plain if omitted)")
        ->check(CLI::PositiveNumber);
  }
  handlers["graded"] = [&] {
    const auto which = param == "helly"   ? GradedParameter::helly
                       : param == "radon" ? GradedParameter::radon
                                          : GradedParameter::colorful;
    const auto prof = graded(load_set_system(input), which, t, c, ctx.opts).value();
    ctx.emit({{"param", param}, {"profile", prof.values}}, show_list(prof.values) + "\n");
    return kOk;
  };

  int k = 2;
  {
    auto* s = sub("partition", "k-th partition number");
    need_input(s, "Set system (.ss)");
    s->add_option("--k", k)->check(CLI::Range(2, 64));
  }
  handlers["partition"] = [&] {
    const int v = partition_number(load_set_system(input), k, ctx.opts).value();
    ctx.emit({{"k", k}, {"partition_number", v}}, std::to_string(v) + "\n");
    return kOk;
  };

  {
    auto* s = sub("colorful", "Colorful Helly number (c-wise with --c)");
    need_input(s, "Set system (.ss)");
    s->add_option("--c", c)->check(CLI::PositiveNumber);
  }
  handlers["colorful"] = [&] {
    const int v = colorful_helly(load_set_system(input), c, ctx.opts).value();
    json rec = {{"colorful", v}};
    if (c) rec["c"] = *c;
    ctx.emit(rec, std::to_string(v) + "\n");
    return kOk;
  };

  int s_size = 2;
  int arity = 1;
  {
    auto* s = sub("fh-profile", "Density of c-wise cliques among s-subsets");
    need_input(s, "Set system (.ss)");
    s->add_option("--s", s_size)->required()->check(CLI::PositiveNumber);
    s->add_option("--c", arity)->check(CLI::PositiveNumber);
  }
  handlers["fh-profile"] = [&] {
    const auto p = fh_profile(load_set_system(input), s_size, arity, ctx.opts).value();
    std::ostringstream tbl;
    tbl << "s: " << p.s << "\nc: " << p.c << "\nalpha: " << p.alpha
        << "\nmax_cwise_clique: " << p.max_cwise_clique << "\nn: " << p.n << '\n';
    ctx.emit({{"s", p.s},
              {"c", p.c},
              {"alpha", to_json(p.alpha)},
              {"max_cwise_clique", p.max_cwise_clique},
              {"n", p.n}},
             tbl.str());
    return kOk;
  };

  // Homology.
  need_input(sub("betti", "Reduced Z2 Betti numbers"), "Complex (.sc)");
  handlers["betti"] = [&] {
    const auto b = reduced_betti(load_complex(input));
    ctx.emit({{"betti", b.values}}, show_list(b.values) + "\n");
    return kOk;
  };

  int h = 1;
  {
    auto* s = sub("shatter", "Homological shatter profile");
    need_input(s, "Subcomplex family (.scf)");
    s->add_option("--h", h)->required()->check(CLI::NonNegativeNumber);
    s->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  }
  handlers["shatter"] = [&] {
    const auto p = shatter(load_family(input), h, k, ctx.opts).value();
    ctx.emit({{"h", h}, {"profile", p.values}}, show_list(p.values) + "\n");
    return kOk;
  };

  {
    auto* s = sub("level", "h-level topological complexity");
    need_input(s, "Subcomplex family (.scf)");
    s->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  }
  handlers["level"] = [&] {
    const int v = level_complexity(load_family(input), h, ctx.opts).value();
    ctx.emit({{"h", h}, {"level", v}}, std::to_string(v) + "\n");
    return kOk;
  };

  need_input(sub("mu", "Largest dim s + dim t over disjoint faces"), "Complex (.sc)");
  handlers["mu"] = [&] {
    const auto v = mu(load_complex(input));
    ctx.emit({{"mu", v ? json(*v) : json(nullptr)}}, (v ? std::to_string(*v) : "none") + "\n");
    return kOk;
  };

  int n = 2;
  {
    auto* s = sub("skeleton", "k-skeleton of the N-simplex");
    s->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    s->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  }
  handlers["skeleton"] = [&] {
    const auto sk = skeleton_simplex(n, k);
    json facets = json::array();
    for (Simplex f : sk.facets()) facets.push_back(indices(f));
    ctx.emit({{"vertices", sk.vertex_count()}, {"f_vector", sk.f_vector()}, {"facets", facets}},
             format_complex(sk));
    return kOk;
  };

  // Chain maps.
  std::string k_path, l_path, map_path;
  {
    auto* s = sub("verify-hae", "Check a chain map for being a homological almost-embedding");
    s->add_option("--k", k_path, "Source complex (.sc)")->required()->check(CLI::ExistingFile);
    s->add_option("--l", l_path, "Target complex (.sc)")->required()->check(CLI::ExistingFile);
    s->add_option("--map", map_path, "Chain map (.cm)")->required()->check(CLI::ExistingFile);
  }
  handlers["verify-hae"] = [&] {
    const auto kc = load_complex(k_path);
    const auto lc = load_complex(l_path);
    const auto v = verify_hae(load_chain_map(map_path, kc, lc));
    static const char* names[] = {"ok", "not-chain-map", "even-vertex-support", "overlapping-supports"};
    const char* status = names[static_cast<int>(v.status)];
    json rec = {{"status", status}};
    if (!v.diagnostic.empty()) rec["diagnostic"] = v.diagnostic;
    if (v.faces) rec["faces"] = json::array({indices(v.faces->first), indices(v.faces->second)});
    ctx.emit(rec, std::string(status) + (v.diagnostic.empty() ? "" : ": " + v.diagnostic) + "\n");
    return v.ok() ? kOk : kFails;
  };

  {
    auto* s = sub("search-hae", "Search for a homological almost-embedding K -> L");
    s->add_option("--k", k_path, "Source complex (.sc)")->required()->check(CLI::ExistingFile);
    s->add_option("--l", l_path, "Target complex (.sc)")->required()->check(CLI::ExistingFile);
  }
  handlers["search-hae"] = [&] {
    const auto res = search_hae(load_complex(k_path), load_complex(l_path), ctx.opts.budget);
    json rec = {{"outcome", to_string(res.tag)}, {"nodes_explored", res.nodes_explored}};
    std::string table = std::string(to_string(res.tag)) + "\n";
    if (res.map) {
      rec["map"] = chain_map_json(*res.map);
      table += format_chain_map(*res.map);
    }
    ctx.emit(rec, table);
    return res.tag == SearchOutcome::Tag::budget_exceeded ? kBudget : kOk;
  };

  // Inequality checks.
  std::int64_t r = 2;
  sub("xi", "Tower function Xi(r)")->add_option("--r", r)->required();
  handlers["xi"] = [&] {
    const auto v = xi(r).str();
    ctx.emit({{"r", r}, {"xi", v}}, v + "\n");
    return kOk;
  };

  std::string suite;
  int m = 2, t0 = 1, ell = 2;
  {
    auto* s = sub("check", "Run one inequality check");
    need_input(s, "Set system (.ss)");
    s->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"levi", "jamison", "graded-linear", "radongrowth", "hellygrowth", "holmsen"}));
    s->add_option("--m", m, "jamison")->check(CLI::Range(2, 64));
    s->add_option("--n", n, "jamison")->check(CLI::Range(2, 64));
    s->add_option("--t", t, "graded-linear, radongrowth, hellygrowth: largest t (default: member count)");
    s->add_option("--t0", t0, "hellygrowth");
    s->add_option("--c", c, "holmsen");
    s->add_option("--ell", ell, "holmsen");
  }
  handlers["check"] = [&] {
    const auto f = load_set_system(input);
    const int t_max = t > 0 ? t : std::max(f.size(), 1);
    if (suite == "levi") return report(ctx, check_levi(f, ctx.opts));
    if (suite == "jamison") return report(ctx, check_jamison(f, m, std::max(n, 2), ctx.opts));
    if (suite == "graded-linear") return report(ctx, check_graded_linear(f, t_max, ctx.opts));
    if (suite == "radongrowth") return report(ctx, check_radongrowth(f, std::max(t_max, 2), ctx.opts));
    if (suite == "hellygrowth") return report(ctx, check_hellygrowth(f, t0, t_max, ctx.opts));
    return report(ctx, holmsen_hypothesis(f, c.value_or(1), ell, ctx.opts));
  };

  std::string psi_path;
  std::int64_t t_max_big = 0;
  {
    auto* s = sub("rg2-witness", "Least t1 with Xi(psi(t1)) * psi(t0) < t1");
    s->add_option("--psi", psi_path, "Psi table (.psi)")->required()->check(CLI::ExistingFile);
    s->add_option("--tmax", t_max_big)->required()->check(CLI::PositiveNumber);
  }
  handlers["rg2-witness"] = [&] { return report(ctx, rg2_witness(load_psi(psi_path), t_max_big)); };

  {
    auto* s = sub("diagnose-growth", "Sign of radon(t) - log2 t for t = 1..T");
    need_input(s, "Set system (.ss)");
    s->add_option("--t", t)->required()->check(CLI::PositiveNumber);
  }
  handlers["diagnose-growth"] = [&] {
    const auto rows = growth_diagnostic(load_set_system(input), t, ctx.opts).value();
    json list = json::array();
    std::string table;
    for (const auto& e : rows) {
      const char* sign = e.sign > 0 ? "+" : e.sign < 0 ? "-" : "0";
      list.push_back({{"t", e.t}, {"radon", e.radon}, {"sign", sign}});
      table += std::to_string(e.t) + "\t" + std::to_string(e.radon) + "\t" + sign + "\n";
    }
    ctx.emit({{"rows", list}}, table);
    return kOk;
  };

  std::uint64_t seed = 0;
  int count = 1, ground = 4, members = 4;
  std::string kind = "random", out_dir;
  {
    auto* s = sub("gen-corpus", "Write generated set systems as .ss files");
    s->add_option("--seed", seed);
    s->add_option("--count", count)->check(CLI::PositiveNumber);
    s->add_option("--ground", ground, "Ground size (n for intervals and star)")->check(CLI::Range(1, 64));
    s->add_option("--members", members)->check(CLI::Range(0, 64));
    s->add_option("--kind", kind)->check(CLI::IsMember({"random", "intervals", "star"}));
    s->add_option("--out", out_dir, "Output directory")->required();
  }
  handlers["gen-corpus"] = [&] {
    std::vector<std::pair<std::string, SetSystem>> files;
    if (kind == "random") {
      auto systems = random_corpus(seed, count, ground, members);
      for (std::size_t i = 0; i < systems.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof name, "random_%llu_%04zu.ss", static_cast<unsigned long long>(seed), i);
        files.emplace_back(name, std::move(systems[i]));
      }
    } else if (kind == "intervals") {
      files.emplace_back("intervals_" + std::to_string(ground) + ".ss", intervals_system(ground));
    } else {
      files.emplace_back("star_" + std::to_string(ground) + ".ss", star_system(ground));
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    std::string table;
    for (const auto& [name, f] : files) {
      const auto path = (std::filesystem::path(out_dir) / name).string();
      std::ofstream file(path);
      if (!file) throw InputError("cannot write '" + path + "'");
      file << format_set_system(f);
      json sets = json::array();
      for (const auto& mset : f.members()) sets.push_back(indices(mset));
      ctx.emit({{"file", path}, {"ground", f.ground_size()}, {"members", sets}}, "");
      table += path + "\n";
    }
    if (ctx.format == Format::table) out << table;
    return kOk;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  ctx.command = chosen->get_name();
  ctx.format = format == "jsonl" ? Format::jsonl : Format::table;
  try {
    ctx.opts.budget = budget ? *budget : default_budget();
    ctx.opts.threads = threads;
    return handlers.at(ctx.command)();
  } catch (const BudgetExceededError& e) {
    json rec = {{"status", "budget"}, {"nodes_explored", e.info().nodes_explored}};
    if (e.info().lower_bound) rec["lower_bound"] = *e.info().lower_bound;
    ctx.emit(rec, "BudgetExceeded after " + std::to_string(e.info().nodes_explored) + " nodes\n");
    return kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace cvxtop
