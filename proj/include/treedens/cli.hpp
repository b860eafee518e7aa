#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "treedens/constructions.hpp"
#include "treedens/counting.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/errors.hpp"
#include "treedens/extremal.hpp"
#include "treedens/numeric.hpp"
#include "treedens/tree.hpp"
#include "treedens/verify.hpp"

namespace treedens {

// Process-level knobs. Resolution order: built-in default, then the
// TREEDENS_* environment variable, then the command-line flag.
struct Config {
  std::int64_t subset_budget = kDefaultSubsetBudget;
  std::int64_t leaf_budget = kDefaultLeafBudget;
  std::optional<std::filesystem::path> cache_dir;
  std::string output_format;  // per-command default when empty

  void validate() const {
    if (subset_budget <= 0 || leaf_budget <= 0)
      throw DomainError("budgets must be positive");
  }
};

namespace cli_detail {

using Json = nlohmann::ordered_json;

// Environment values fill in whatever the command line left untouched.
inline void apply_env(Config& config, const CLI::App& app,
                      const std::string& cache_dir_flag) {
  const auto read_int = [&](const char* name, const char* flag,
                            std::int64_t& slot) {
    if (app.count(flag) > 0) return;
    if (const char* raw = std::getenv(name)) {
      try {
        slot = std::stoll(raw);
      } catch (const std::exception&) {
        throw DomainError(std::string(name) + " is not an integer: " + raw);
      }
    }
  };
  read_int("TREEDENS_SUBSET_BUDGET", "--subset-budget", config.subset_budget);
  read_int("TREEDENS_LEAF_BUDGET", "--leaf-budget", config.leaf_budget);
  if (cache_dir_flag.empty()) {
    if (const char* raw = std::getenv("TREEDENS_CACHE_DIR"))
      config.cache_dir = std::filesystem::path(raw);
  }
  if (config.output_format.empty()) {
    if (const char* raw = std::getenv("TREEDENS_FORMAT"))
      config.output_format = raw;
  }
}

inline std::string pick_format(const Config& config,
                               const std::string& natural) {
  if (config.output_format.empty()) return natural;
  if (config.output_format != "json" && config.output_format != "csv" &&
      config.output_format != "lines")
    throw DomainError("unknown output format '" + config.output_format +
                      "' (expected json, csv or lines)");
  return config.output_format;
}

inline std::vector<std::size_t> parse_leaf_list(const std::string& text) {
  std::vector<std::size_t> indices;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = text.substr(pos, next - pos);
    try {
      indices.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw DomainError("bad leaf index '" + item + "'");
    }
    pos = next + 1;
  }
  return indices;
}

inline Json count_json(const CountResult& r) {
  Json j;
  j["copies"] = r.copies.str();
  j["total"] = r.total_subsets.str();
  j["density"] = to_fraction_string(r.density);
  return j;
}

}  // namespace cli_detail

// The whole command-line surface, runnable in-process. Returns the exit
// status: 0 success, 1 domain error (or failed verification), 2 usage
// error.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  using cli_detail::Json;

  Config config;

  CLI::App app{"exact leaf-induced subtree densities in d-ary trees"};
  app.require_subcommand(1);
  app.add_option("--subset-budget", config.subset_budget,
                 "cap on binom(|T|,|D|) for --oracle counting");
  app.add_option("--leaf-budget", config.leaf_budget,
                 "cap on constructed tree sizes");
  std::string cache_dir_flag;
  app.add_option("--cache-dir", cache_dir_flag,
                 "directory for enumeration count caches");
  app.add_option("--format", config.output_format,
                 "output format: json, csv or lines");

  // count --pattern D --tree T [--per-leaf] [--oracle]
  std::string arg_pattern, arg_tree, arg_leaves, arg_s1, arg_s2, arg_suite;
  bool flag_per_leaf = false, flag_oracle = false, flag_strict = false,
       flag_count_only = false;
  int arg_d = 2, arg_k = 2, arg_steps = 1;
  std::int64_t arg_n = 1;
  std::size_t arg_leaf_count = 1, arg_max_leaves = 1;
  double arg_time_budget = 60.0;

  CLI::App* cmd_count = app.add_subcommand("count", "copies and density");
  cmd_count->add_option("--pattern", arg_pattern)->required();
  cmd_count->add_option("--tree", arg_tree)->required();
  cmd_count->add_flag("--per-leaf", flag_per_leaf);
  cmd_count->add_flag("--oracle", flag_oracle);

  CLI::App* cmd_induce =
      app.add_subcommand("induce", "leaf-induced subtree");
  cmd_induce->add_option("--tree", arg_tree)->required();
  cmd_induce->add_option("--leaves", arg_leaves)->required();

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "all shapes of a universe");
  cmd_enumerate->add_option("--d", arg_d)->required();
  cmd_enumerate->add_option("--leaves", arg_leaf_count)->required();
  cmd_enumerate->add_flag("--strict", flag_strict);
  cmd_enumerate->add_flag("--count-only", flag_count_only);

  CLI::App* cmd_maximize =
      app.add_subcommand("maximize", "maximum density over a universe");
  cmd_maximize->add_option("--pattern", arg_pattern)->required();
  cmd_maximize->add_option("--d", arg_d)->required();
  cmd_maximize->add_option("--leaves", arg_leaf_count)->required();
  cmd_maximize->add_flag("--strict", flag_strict);

  CLI::App* cmd_bounds =
      app.add_subcommand("bounds", "inducibility intervals for growing n");
  cmd_bounds->add_option("--pattern", arg_pattern)->required();
  cmd_bounds->add_option("--d", arg_d)->required();
  cmd_bounds->add_option("--max-leaves", arg_max_leaves)->required();
  cmd_bounds->add_option("--time-budget", arg_time_budget,
                         "wall-clock seconds before emitting a partial table");

  CLI::App* cmd_construct =
      app.add_subcommand("construct", "tree transformations");
  cmd_construct->require_subcommand(1);
  CLI::App* cmd_gmap = cmd_construct->add_subcommand(
      "gmap", "binary injection of a strictly d-ary tree");
  cmd_gmap->add_option("--tree", arg_tree)->required();
  cmd_gmap->add_option("--d", arg_d)->required();
  CLI::App* cmd_compose =
      cmd_construct->add_subcommand("compose", "append s2 to every leaf of s1");
  cmd_compose->add_option("--s1", arg_s1)->required();
  cmd_compose->add_option("--s2", arg_s2)->required();
  CLI::App* cmd_iterate =
      cmd_construct->add_subcommand("iterate", "the family T^[steps]");
  cmd_iterate->add_option("--pattern", arg_pattern)->required();
  cmd_iterate->add_option("--steps", arg_steps)->required();
  CLI::App* cmd_tstar = cmd_construct->add_subcommand(
      "tstar", "strictly d-ary padding with audit trace");
  cmd_tstar->add_option("--tree", arg_tree)->required();
  cmd_tstar->add_option("--d", arg_d)->required();
  cmd_tstar->add_option("--leaves", arg_n)->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "re-check one theorem suite");
  cmd_verify->add_option("suite", arg_suite,
                         "oracle | stars | caterpillars | monotone | gmap | "
                         "compose | iterate | tstar | containment | "
                         "completeness")
      ->required();
  std::size_t arg_verify_cap = 0;
  cmd_verify->add_option("--max-leaves", arg_verify_cap,
                         "clamp the suite's dominant size range");

  CLI::App* cmd_formulas =
      app.add_subcommand("formulas", "closed-form values");
  cmd_formulas->require_subcommand(1);
  CLI::App* cmd_stars = cmd_formulas->add_subcommand("stars");
  cmd_stars->add_option("--d", arg_d)->required();
  cmd_stars->add_option("--k", arg_k)->required();
  CLI::App* cmd_cats = cmd_formulas->add_subcommand("caterpillars");
  cmd_cats->add_option("--d", arg_d)->required();
  cmd_cats->add_option("--k", arg_k)->required();
  cmd_cats->add_option("--n", arg_n)->required();
  CLI::App* cmd_lower = cmd_formulas->add_subcommand("lower-bound");
  cmd_lower->add_option("--k", arg_k)->required();

  std::vector<const char*> argv;
  argv.push_back("treedens");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << e.what() << "\n";
      return 2;
    }

    cli_detail::apply_env(config, app, cache_dir_flag);
    if (!cache_dir_flag.empty()) config.cache_dir = cache_dir_flag;
    config.validate();

    if (cmd_count->parsed()) {
      const Tree pattern = parse(arg_pattern);
      const Tree host = parse(arg_tree);
      const CountResult r =
          flag_oracle ? brute_force_count(pattern, host, config.subset_budget)
                      : count_copies(pattern, host);
      const std::string fmt = cli_detail::pick_format(config, "json");
      Json j = cli_detail::count_json(r);
      if (flag_per_leaf) {
        Json per = Json::array();
        for (const BigInt& c : count_through_leaf(pattern, host).per_leaf)
          per.push_back(c.str());
        j["per_leaf"] = per;
      }
      if (fmt == "json") {
        out << j.dump() << "\n";
      } else {
        for (const auto& [key, value] : j.items())
          out << key << " " << (value.is_string()
                                    ? value.get<std::string>()
                                    : value.dump())
              << "\n";
      }
      return 0;
    }

    if (cmd_induce->parsed()) {
      const Tree host = parse(arg_tree);
      const Tree result =
          induce(host, LeafSet(cli_detail::parse_leaf_list(arg_leaves)));
      if (cli_detail::pick_format(config, "lines") == "json")
        out << Json{{"tree", serialize(result)}}.dump() << "\n";
      else
        out << serialize(result) << "\n";
      return 0;
    }

    if (cmd_enumerate->parsed()) {
      const EnumerationSpec spec{arg_d, arg_leaf_count, flag_strict};
      if (flag_count_only) {
        const BigInt count = count_trees_cached(spec, config.cache_dir);
        if (cli_detail::pick_format(config, "lines") == "json")
          out << Json{{"d", spec.d},
                      {"n", spec.n},
                      {"strict", spec.strict},
                      {"count", count.str()}}
                     .dump()
              << "\n";
        else
          out << count.str() << "\n";
        return 0;
      }
      const std::string fmt = cli_detail::pick_format(config, "lines");
      TreeStream stream(spec);
      if (fmt == "json") {
        Json codes = Json::array();
        while (auto t = stream.next()) codes.push_back(t->canonical_code());
        out << Json{{"trees", codes}}.dump() << "\n";
      } else {
        while (auto t = stream.next()) out << t->canonical_code() << "\n";
      }
      return 0;
    }

    if (cmd_maximize->parsed()) {
      const MaxDensityResult r = max_density(
          parse(arg_pattern), {arg_d, arg_leaf_count, flag_strict});
      Json j;
      j["n"] = r.n;
      j["d"] = r.d;
      j["strict"] = r.strict;
      j["max_density"] = to_fraction_string(r.max_density);
      j["maximizers"] = r.maximizers;
      if (cli_detail::pick_format(config, "json") == "lines") {
        out << to_fraction_string(r.max_density) << "\n";
        for (const std::string& code : r.maximizers) out << code << "\n";
      } else {
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (cmd_bounds->parsed()) {
      const Tree pattern = parse(arg_pattern);
      const std::size_t k = pattern.leaf_count();
      const std::string fmt = cli_detail::pick_format(config, "csv");
      const auto start = std::chrono::steady_clock::now();
      CopyCounter dp;
      Json rows = Json::array();
      if (fmt == "csv") out << "n,M_n,lower,upper\n";
      for (std::size_t n = std::max(k * (k - 1) + 1, k);
           n <= arg_max_leaves; ++n) {
        const InducibilityInterval iv =
            inducibility_interval(pattern, arg_d, n, &dp);
        if (fmt == "csv") {
          out << n << "," << to_fraction_string(iv.upper) << ","
              << to_fraction_string(iv.lower) << ","
              << to_fraction_string(iv.upper) << "\n";
        } else if (fmt == "lines") {
          out << n << " " << to_fraction_string(iv.upper) << " "
              << to_fraction_string(iv.lower) << " "
              << to_fraction_string(iv.upper) << "\n";
        } else {
          rows.push_back({{"n", n},
                          {"M_n", to_fraction_string(iv.upper)},
                          {"lower", to_fraction_string(iv.lower)},
                          {"upper", to_fraction_string(iv.upper)}});
        }
        const double elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        if (elapsed > arg_time_budget) break;  // partial table
      }
      if (fmt == "json") out << Json{{"intervals", rows}}.dump() << "\n";
      return 0;
    }

    if (cmd_construct->parsed()) {
      if (cmd_gmap->parsed()) {
        const Tree t = parse(arg_tree);
        // d = 2 has no path to draw; the transformation is the identity
        const Tree image = arg_d == 2 ? t : g_map(t, arg_d);
        if (cli_detail::pick_format(config, "lines") == "json")
          out << Json{{"tree", serialize(image)}}.dump() << "\n";
        else
          out << serialize(image) << "\n";
        return 0;
      }
      if (cmd_compose->parsed()) {
        const Tree result = compose(parse(arg_s1), parse(arg_s2));
        if (cli_detail::pick_format(config, "lines") == "json")
          out << Json{{"tree", serialize(result)}}.dump() << "\n";
        else
          out << serialize(result) << "\n";
        return 0;
      }
      if (cmd_iterate->parsed()) {
        const Tree result =
            iterate_compose(parse(arg_pattern), arg_steps, config.leaf_budget);
        if (cli_detail::pick_format(config, "lines") == "json")
          out << Json{{"tree", serialize(result)}}.dump() << "\n";
        else
          out << serialize(result) << "\n";
        return 0;
      }
      // tstar
      if (arg_n < 1) throw DomainError("n must be positive");
      const ConstructionTrace trace =
          t_star(parse(arg_tree), arg_d, static_cast<std::size_t>(arg_n));
      Json j;
      j["d"] = arg_d;
      j["n"] = arg_n;
      j["t_prime"] = serialize(trace.t_prime);
      j["added_leaves"] = trace.added_leaves;
      j["m"] = trace.m;
      j["s"] = serialize(trace.s);
      j["t_double_prime"] = serialize(trace.t_double_prime);
      j["s_p"] = serialize(trace.s_p);
      j["result"] = serialize(trace.result);
      out << j.dump() << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      const VerifyReport report = run_suite(
          arg_suite, arg_verify_cap > 0
                         ? std::optional<std::size_t>(arg_verify_cap)
                         : std::nullopt);
      if (cli_detail::pick_format(config, "json") == "lines") {
        out << (report.pass ? "pass" : "fail") << "\n";
        for (const std::string& f : report.failures) out << f << "\n";
      } else {
        out << report.to_json().dump() << "\n";
      }
      return report.pass ? 0 : 1;
    }

    // formulas
    if (cmd_stars->parsed()) {
      const Rational value = star_inducibility(arg_d, arg_k);
      if (cli_detail::pick_format(config, "lines") == "json")
        out << Json{{"value", to_fraction_string(value)}}.dump() << "\n";
      else
        out << to_fraction_string(value) << "\n";
      return 0;
    }
    if (cmd_cats->parsed()) {
      const BigInt value = caterpillar_count(arg_d, arg_k, arg_n);
      if (cli_detail::pick_format(config, "lines") == "json")
        out << Json{{"value", value.str()}}.dump() << "\n";
      else
        out << value.str() << "\n";
      return 0;
    }
    const Rational value = lower_bound_generic(arg_k);
    if (cli_detail::pick_format(config, "lines") == "json")
      out << Json{{"value", to_fraction_string(value)}}.dump() << "\n";
    else
      out << to_fraction_string(value) << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace treedens
