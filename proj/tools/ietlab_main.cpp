// ietlab — exact analysis of interval exchange transformations
// SPDX-License-Identifier: Apache-2.0
//
// Batch CLI over the C API of the shared library. The CLI owns argument and
// config-file handling, catalog resolution, length sampling and file output;
// everything mathematical happens behind ietlab.h.
//
// Exit codes: 0 success, 2 configuration error, 3 computation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ietlab/ietlab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string last_error() {
  const char* msg = ietlab_last_error();
  return msg && *msg ? msg : "unknown error";
}

// Failures from building objects out of user input are configuration
// problems; failures during an analysis are computation problems.
void check_config(int rc, const std::string& what) {
  if (rc != IETLAB_OK) throw ConfigError(what + ": " + last_error());
}
void check_compute(int rc, const std::string& what) {
  if (rc != IETLAB_OK) throw ComputeError(what + ": " + last_error());
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ietlab_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

using IetPtr = std::unique_ptr<ietlab_iet, decltype(&ietlab_iet_free)>;
using CatalogPtr = std::unique_ptr<ietlab_catalog, decltype(&ietlab_catalog_free)>;

// All settings a command can draw from flags or a config file.
struct Options {
  std::string command;
  std::string perm;
  std::string lengths;
  bool normalize = false;
  long horizon = 500;
  bool horizon_set = false;
  std::string eps = "1/100";
  std::string delta = "1/100";
  long window_radius = 2;
  std::string threshold;
  std::string out;
  std::string format;
  bool sample = false;
  unsigned long long seed = 0;
  bool seed_set = false;
  std::string left, right;
  int digits = 12;
  std::string catalog_path;
  std::string config_path;
};

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Config files are either a JSON object or simple key=value lines; keys
// mirror the long flag names.
void merge_config_file(Options& opt, const std::string& path,
                       const std::vector<std::string>& set_on_cli) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  auto on_cli = [&](const std::string& key) {
    return std::find(set_on_cli.begin(), set_on_cli.end(), key) != set_on_cli.end();
  };

  auto assign = [&](const std::string& key, const std::string& value) {
    if (on_cli(key)) return;  // command line wins
    if (key == "command") opt.command = value;
    else if (key == "perm") opt.perm = value;
    else if (key == "lengths") opt.lengths = value;
    else if (key == "normalize") opt.normalize = (value == "true" || value == "1");
    else if (key == "N") { opt.horizon = std::stol(value); opt.horizon_set = true; }
    else if (key == "eps") opt.eps = value;
    else if (key == "delta") opt.delta = value;
    else if (key == "b") opt.window_radius = std::stol(value);
    else if (key == "threshold") opt.threshold = value;
    else if (key == "out") opt.out = value;
    else if (key == "format") opt.format = value;
    else if (key == "sample") opt.sample = (value == "true" || value == "1");
    else if (key == "seed") { opt.seed = std::stoull(value); opt.seed_set = true; }
    else if (key == "left") opt.left = value;
    else if (key == "right") opt.right = value;
    else if (key == "digits") opt.digits = std::stoi(value);
    else if (key == "catalog") opt.catalog_path = value;
    else throw ConfigError("unknown config key '" + key + "'");
  };

  std::string stripped = trim(text);
  try {
    if (!stripped.empty() && stripped[0] == '{') {
      auto j = nlohmann::json::parse(text);
      for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        std::string value;
        if (v.is_string()) value = v.get<std::string>();
        else if (v.is_boolean()) value = v.get<bool>() ? "true" : "false";
        else if (v.is_number_integer()) value = std::to_string(v.get<long long>());
        else throw ConfigError("config key '" + it.key() + "' has unsupported type");
        assign(it.key(), value);
      }
    } else {
      std::istringstream lines(text);
      std::string line;
      int lineno = 0;
      while (std::getline(lines, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
          throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        assign(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ConfigError("config file contains a malformed number");
  }
}

CatalogPtr open_catalog(const Options& opt) {
  ietlab_catalog* raw = nullptr;
  std::string path = opt.catalog_path;
  if (path.empty()) {
    const char* env = std::getenv("IETLAB_CATALOG");
    if (env && *env) path = env;
  }
  if (!path.empty())
    check_config(ietlab_catalog_load(path.c_str(), &raw), "loading catalog '" + path + "'");
  else
    check_config(ietlab_catalog_builtin(&raw), "builtin catalog");
  return CatalogPtr(raw, &ietlab_catalog_free);
}

// Draws d positive rationals with denominator 10^6 from a seeded generator;
// the library normalizes the sum to 1 exactly.
std::string sample_lengths(const std::string& perm_text, unsigned long long seed) {
  std::istringstream in(perm_text);
  int d = 0;
  std::string tok;
  while (in >> tok) ++d;
  if (d == 0) throw ConfigError("--sample needs an explicit permutation");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 1000000);
  std::string lengths;
  for (int i = 0; i < d; ++i) {
    if (i) lengths += ", ";
    lengths += std::to_string(num(rng)) + "/1000000";
  }
  return lengths;
}

// Resolve --perm: explicit lengths or sample mode mean permutation text;
// otherwise the value names a catalog entry.
struct ResolvedSystem {
  IetPtr iet{nullptr, &ietlab_iet_free};
  std::string catalog_name;  // empty for explicit systems
};

ResolvedSystem resolve_system(const Options& opt, std::vector<std::string>& errors) {
  ResolvedSystem sys;
  if (opt.perm.empty()) {
    errors.push_back("no system selected: pass --perm (catalog name or permutation text)");
    return sys;
  }
  if (opt.sample && !opt.lengths.empty())
    errors.push_back("--sample and --lengths are mutually exclusive");

  ietlab_iet* raw = nullptr;
  if (!opt.lengths.empty() || opt.sample) {
    std::string lengths =
        opt.sample ? sample_lengths(opt.perm, opt.seed) : opt.lengths;
    int rc = ietlab_iet_create(opt.perm.c_str(), lengths.c_str(),
                               opt.normalize || opt.sample, &raw);
    if (rc != IETLAB_OK) {
      errors.push_back("building system: " + last_error());
      return sys;
    }
    sys.iet.reset(raw);
    return sys;
  }

  CatalogPtr cat = open_catalog(opt);
  if (ietlab_catalog_build(cat.get(), opt.perm.c_str(), &raw) == IETLAB_OK) {
    sys.iet.reset(raw);
    sys.catalog_name = opt.perm;
    return sys;
  }
  errors.push_back("'" + opt.perm + "' is not a catalog entry; pass --lengths for an explicit system");
  return sys;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ComputeError("cannot open output file: " + path);
  out << content;
  if (!out) throw ComputeError("failed writing output file: " + path);
}

std::string side_file(const std::string& out, const std::string& suffix) {
  auto dot = out.rfind('.');
  auto slash = out.find_last_of("/\\");
  std::string stem = (dot == std::string::npos || (slash != std::string::npos && dot < slash))
                         ? out
                         : out.substr(0, dot);
  return stem + suffix;
}

// --- commands --------------------------------------------------------------

int cmd_perm(const Options& opt) {
  OwnedString out;
  check_config(ietlab_perm_report_json(opt.perm.c_str(), &out.ptr), "perm");
  write_output(opt.out, out.str());
  return kExitOk;
}

int cmd_catalog(const Options& opt) {
  CatalogPtr cat = open_catalog(opt);
  OwnedString listing;
  check_compute(ietlab_catalog_list_json(cat.get(), &listing.ptr), "catalog");
  if (opt.format == "csv") {
    auto j = nlohmann::json::parse(listing.str());
    std::ostringstream csv;
    csv << "name,permutation,lengths,irreducible,type_w\n";
    for (const auto& e : j) {
      std::string perm, lens;
      for (const auto& v : e["permutation"]) {
        if (!perm.empty()) perm += ' ';
        perm += std::to_string(v.get<int>());
      }
      for (const auto& v : e["lengths"]) {
        if (!lens.empty()) lens += "; ";
        lens += v.get<std::string>();
      }
      csv << e["name"].get<std::string>() << ',' << perm << ',' << lens << ','
          << (e["irreducible"].get<bool>() ? 1 : 0) << ','
          << (e["type_w"].is_null() ? "" : (e["type_w"].get<bool>() ? "1" : "0")) << '\n';
    }
    write_output(opt.out, csv.str());
  } else {
    write_output(opt.out, listing.str());
  }
  return kExitOk;
}

int cmd_analyze(const Options& opt, const ResolvedSystem& sys) {
  nlohmann::json params;
  params["N"] = opt.horizon;
  params["eps"] = opt.eps;
  params["delta"] = opt.delta;
  params["b"] = opt.window_radius;
  params["digits"] = opt.digits;
  if (!opt.threshold.empty()) params["threshold"] = opt.threshold;
  if (!sys.catalog_name.empty()) params["catalog_name"] = sys.catalog_name;

  OwnedString report;
  check_compute(ietlab_analyze_json(sys.iet.get(), params.dump().c_str(), &report.ptr),
                "analyze");
  write_output(opt.out, report.str());

  if (!opt.out.empty() && opt.out != "-") {
    OwnedString eps_csv;
    check_compute(ietlab_eps_sweep_csv(sys.iet.get(), opt.horizon, opt.digits, &eps_csv.ptr),
                  "analyze eps sweep");
    write_output(side_file(opt.out, "_eps.csv"), eps_csv.str());

    OwnedString rig_csv;
    check_compute(
        ietlab_rigidity_csv(sys.iet.get(), opt.horizon, opt.eps.c_str(),
                            opt.threshold.empty() ? nullptr : opt.threshold.c_str(), opt.digits,
                            &rig_csv.ptr),
        "analyze rigidity sweep");
    write_output(side_file(opt.out, "_rigidity.csv"), rig_csv.str());
  }
  return kExitOk;
}

int cmd_eps(const Options& opt, const ResolvedSystem& sys) {
  OwnedString out;
  if (opt.format == "json")
    check_compute(ietlab_eps_sweep_json(sys.iet.get(), opt.horizon, opt.digits, &out.ptr), "eps");
  else
    check_compute(ietlab_eps_sweep_csv(sys.iet.get(), opt.horizon, opt.digits, &out.ptr), "eps");
  write_output(opt.out, out.str());
  return kExitOk;
}

int cmd_rigidity(const Options& opt, const ResolvedSystem& sys) {
  OwnedString out;
  const char* threshold = opt.threshold.empty() ? nullptr : opt.threshold.c_str();
  if (opt.format == "json")
    check_compute(ietlab_rigidity_json(sys.iet.get(), opt.horizon, opt.eps.c_str(), threshold,
                                       opt.digits, &out.ptr),
                  "rigidity");
  else
    check_compute(ietlab_rigidity_csv(sys.iet.get(), opt.horizon, opt.eps.c_str(), threshold,
                                      opt.digits, &out.ptr),
                  "rigidity");
  write_output(opt.out, out.str());
  return kExitOk;
}

int cmd_tower(const Options& opt, const ResolvedSystem& sys) {
  if (opt.left.empty() != opt.right.empty())
    throw ConfigError("--left and --right must be given together");
  OwnedString out;
  check_compute(ietlab_tower_json(sys.iet.get(), opt.left.empty() ? nullptr : opt.left.c_str(),
                                  opt.right.empty() ? nullptr : opt.right.c_str(), opt.horizon,
                                  opt.digits, &out.ptr),
                "tower");
  write_output(opt.out, out.str());
  return kExitOk;
}

int dispatch(Options& opt, const std::vector<std::string>& set_on_cli) {
  if (!opt.config_path.empty()) merge_config_file(opt, opt.config_path, set_on_cli);

  if (opt.command.empty()) throw ConfigError("no command selected");
  if (opt.format.empty())
    opt.format = (opt.command == "eps" || opt.command == "rigidity") ? "csv" : "json";

  // Aggregate every validation problem before running anything.
  std::vector<std::string> errors;
  if (opt.format != "json" && opt.format != "csv")
    errors.push_back("--format must be json or csv");
  if (opt.horizon < 1) errors.push_back("--N must be >= 1");
  if (opt.digits < 1) errors.push_back("--digits must be >= 1");
  if (opt.window_radius < 0) errors.push_back("--b must be >= 0");
  if (opt.command == "perm" && opt.perm.empty())
    errors.push_back("perm: missing permutation text");
  if (opt.seed_set && !opt.sample) errors.push_back("--seed requires --sample");

  ResolvedSystem sys;
  bool needs_system = opt.command == "analyze" || opt.command == "eps" ||
                      opt.command == "rigidity" || opt.command == "tower";
  if (needs_system && errors.empty()) sys = resolve_system(opt, errors);

  if (!errors.empty()) {
    std::cerr << "configuration errors:\n";
    for (const auto& e : errors) std::cerr << "  - " << e << "\n";
    return kExitConfig;
  }

  if (opt.command == "perm") return cmd_perm(opt);
  if (opt.command == "catalog") return cmd_catalog(opt);
  if (opt.command == "analyze") return cmd_analyze(opt, sys);
  if (opt.command == "eps") return cmd_eps(opt, sys);
  if (opt.command == "rigidity") return cmd_rigidity(opt, sys);
  if (opt.command == "tower") return cmd_tower(opt, sys);
  throw ConfigError("unknown command '" + opt.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact analysis toolkit for interval exchange transformations"};
  app.set_version_flag("--version", []() { return std::string(ietlab_version()); });
  app.require_subcommand(0, 1);
  app.add_option("--config", opt.config_path, "config file (JSON or key=value lines)");

  std::vector<std::string> set_on_cli;
  auto track = [&set_on_cli](const std::string& key) {
    return [&set_on_cli, key](const std::string&) { set_on_cli.push_back(key); };
  };

  auto add_common = [&](CLI::App* cmd, bool with_system) {
    cmd->add_option("--config", opt.config_path, "config file (JSON or key=value lines)");
    cmd->add_option("--out", opt.out, "output path (default stdout)")
        ->each(track("out"));
    cmd->add_option("--format", opt.format, "json or csv")->each(track("format"));
    cmd->add_option("--digits", opt.digits, "decimal digits in renderings")
        ->each(track("digits"));
    cmd->add_option("--catalog", opt.catalog_path,
                    "catalog file (default: $IETLAB_CATALOG or builtin)")
        ->each(track("catalog"));
    if (with_system) {
      cmd->add_option("--perm", opt.perm, "catalog name, or permutation text like \"3 2 1\"")
          ->each(track("perm"));
      cmd->add_option("--lengths", opt.lengths, "comma-separated lengths (exact scalars)")
          ->each(track("lengths"));
      cmd->add_flag("--normalize", opt.normalize, "rescale lengths to unit sum exactly")
          ->each(track("normalize"));
      cmd->add_option("--N", opt.horizon, "sweep horizon")->each(track("N"));
      cmd->add_flag("--sample", opt.sample, "draw rational lengths from a seeded generator")
          ->each(track("sample"));
      cmd->add_option("--seed", opt.seed, "seed for --sample")
          ->each([&opt, &set_on_cli](const std::string&) {
            opt.seed_set = true;
            set_on_cli.push_back("seed");
          });
    }
  };

  CLI::App* perm = app.add_subcommand("perm", "combinatorial facts for a permutation");
  perm->add_option("text", opt.perm, "permutation images, e.g. \"3 2 1\"")->each(track("perm"));
  add_common(perm, false);
  perm->add_option("--perm", opt.perm, "permutation images")->each(track("perm"));

  CLI::App* catalog = app.add_subcommand("catalog", "list named systems");
  catalog->add_option("path", opt.catalog_path, "catalog file")->each(track("catalog"));
  add_common(catalog, false);

  CLI::App* analyze = app.add_subcommand("analyze", "full analysis report (JSON + CSV side files)");
  add_common(analyze, true);
  analyze->add_option("--eps", opt.eps, "rigidity displacement bound")->each(track("eps"));
  analyze->add_option("--delta", opt.delta, "invariance window width")->each(track("delta"));
  analyze->add_option("--b", opt.window_radius, "invariance window radius")->each(track("b"));
  analyze->add_option("--threshold", opt.threshold, "rigidity candidate threshold (default eps)")
      ->each(track("threshold"));

  CLI::App* eps = app.add_subcommand("eps", "eps_n sweep (CSV by default)");
  add_common(eps, true);

  CLI::App* rigidity = app.add_subcommand("rigidity", "rigidity measure sweep (CSV by default)");
  add_common(rigidity, true);
  rigidity->add_option("--eps", opt.eps, "displacement bound")->each(track("eps"));
  rigidity->add_option("--threshold", opt.threshold, "candidate threshold (default eps)")
      ->each(track("threshold"));

  CLI::App* tower = app.add_subcommand("tower", "greedy tower over a base interval");
  add_common(tower, true);
  tower->add_option("--left", opt.left, "base interval left endpoint (default: minimal cell)")
      ->each(track("left"));
  tower->add_option("--right", opt.right, "base interval right endpoint")->each(track("right"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  for (CLI::App* sub : {perm, catalog, analyze, eps, rigidity, tower})
    if (sub->parsed()) opt.command = sub->get_name();

  try {
    return dispatch(opt, set_on_cli);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ComputeError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
}
