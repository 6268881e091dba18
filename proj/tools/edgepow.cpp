// edgepow: associated primes of powers of edge ideals from the command line.
//
// Exit codes: 0 success, 1 internal error or differential mismatch,
// 2 usage, input or resource error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "edgepow/ass_primes.hpp"
#include "edgepow/canonical.hpp"
#include "edgepow/compare.hpp"
#include "edgepow/ears.hpp"
#include "edgepow/error.hpp"
#include "edgepow/graph_io.hpp"
#include "edgepow/report.hpp"
#include "edgepow/sbases.hpp"
#include "edgepow/socle_oracle.hpp"

namespace fs = std::filesystem;
using namespace edgepow;

namespace {

struct Config {
  std::vector<std::string> inputs;
  std::string edges;
  int n = 0;
  int t = 0;
  int t_max = 0;
  std::string format = "json";
  int jobs = 1;
  int n_max = 0;
  std::uint64_t guard_ops = OracleOptions{}.guard_ops;
  std::uint64_t seed = 1;
  int s = 1;
  int sample = 0;
  bool widen = false;
  bool all = false;
  std::string route = "ear";
};

struct Input {
  std::string name;
  Graph graph;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("edgepow");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("edgepow: [%l] %v");
  const char* level = std::getenv("EDGEPOW_LOG");
  spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
}

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

// Files named on the command line, every regular file of a named directory
// (sorted by path), "-" for standard input, and the inline --edges graph.
std::vector<Input> load_inputs(const Config& cfg, bool allow_dirs) {
  std::vector<Input> out;
  for (const auto& path : cfg.inputs) {
    if (path == "-") {
      try {
        out.push_back({"<stdin>", parse_graph(read_stdin())});
      } catch (const InputError& e) {
        throw InputError(std::string("<stdin>: ") + e.what());
      }
      continue;
    }
    if (allow_dirs && fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(path))
        if (entry.is_regular_file()) files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) out.push_back({f.string(), read_graph_file(f.string())});
      continue;
    }
    out.push_back({path, read_graph_file(path)});
  }
  if (!cfg.edges.empty()) out.push_back({"--edges", parse_edge_list(cfg.edges, cfg.n)});
  for (const auto& in : out) spdlog::debug("loaded {}: n={} m={}", in.name, in.graph.n(), in.graph.edge_count());
  return out;
}

// Runs fn on every input with up to `jobs` threads and returns the results
// in input order.
template <class Result>
std::vector<Result> map_inputs(const std::vector<Input>& inputs, int jobs,
                               const std::function<Result(const Input&)>& fn) {
  std::vector<Result> out(inputs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < inputs.size();) {
      try {
        out[k] = fn(inputs[k]);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

struct Rendered {
  Json json;
  std::string table;
};

void emit(const Config& cfg, const std::vector<Input>& inputs, const std::vector<Rendered>& results) {
  if (cfg.format == "json") {
    if (results.size() == 1) {
      std::cout << results[0].json.dump() << "\n";
      return;
    }
    Json all = Json::array();
    for (std::size_t k = 0; k < results.size(); ++k)
      all.push_back(Json{{"input", inputs[k].name}, {"result", results[k].json}});
    std::cout << all.dump() << "\n";
    return;
  }
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results.size() > 1) std::cout << "== " << inputs[k].name << " ==\n";
    std::cout << results[k].table;
  }
}

std::vector<Input> require_inputs(const Config& cfg, bool allow_dirs = false) {
  auto inputs = load_inputs(cfg, allow_dirs);
  if (inputs.empty()) throw InputError("no inputs");
  return inputs;
}

// The powers to report: --t alone, or 1..--t-max.
std::vector<int> powers(const Config& cfg) {
  if (cfg.t > 0 && cfg.t_max > 0) throw InputError("use either --t or --t-max, not both");
  if (cfg.t_max > 0) {
    std::vector<int> out;
    for (int t = 1; t <= cfg.t_max; ++t) out.push_back(t);
    return out;
  }
  return {cfg.t > 0 ? cfg.t : 1};
}

int cmd_ass(const Config& cfg) {
  const auto inputs = require_inputs(cfg);
  const auto ts = powers(cfg);
  const auto results = map_inputs<Rendered>(inputs, cfg.jobs, [&](const Input& in) {
    Rendered r;
    Json per_t = Json::array();
    for (int t : ts) {
      const AssResult res = associated_primes(in.graph, t);
      spdlog::info("{}: t={} minimal={} embedded={}", in.name, t, res.minimal_primes.size(),
                   res.embedded_primes.size());
      per_t.push_back(to_json(res));
      r.table += to_table(res);
    }
    r.json = ts.size() == 1 ? per_t[0] : per_t;
    return r;
  });
  emit(cfg, inputs, results);
  return 0;
}

int cmd_mu_star(const Config& cfg) {
  if (cfg.route != "ear" && cfg.route != "weights") throw InputError("--route must be ear or weights");
  const auto inputs = require_inputs(cfg);
  const auto results = map_inputs<Rendered>(inputs, cfg.jobs, [&](const Input& in) {
    const MuStarResult res =
        cfg.route == "ear" ? phi_star(in.graph) : mu_star_via_weights(in.graph, cfg.t_max > 0 ? cfg.t_max : 32);
    Rendered r{to_json(res), to_table(res)};
    if (!has_isolated_vertex(in.graph)) {
      const SInvariant s = s_invariant_with_witness(in.graph);
      r.json["s"] = s.s;
      r.json["s_witness"] = to_json(s.witness);
      r.table += "s = " + std::to_string(s.s) + "  dominating witness " + to_string(s.witness) + "\n";
    }
    return r;
  });
  emit(cfg, inputs, results);
  return 0;
}

int cmd_stab(const Config& cfg) {
  const auto inputs = require_inputs(cfg);
  const auto results = map_inputs<Rendered>(inputs, cfg.jobs, [&](const Input& in) {
    const StabilityReport res = ass_infinity(in.graph);
    return Rendered{to_json(res), to_table(res)};
  });
  emit(cfg, inputs, results);
  return 0;
}

int cmd_socle(const Config& cfg) {
  const auto inputs = require_inputs(cfg);
  OracleOptions options;
  options.guard_ops = cfg.guard_ops;
  options.widen = cfg.widen;
  const int t = cfg.t > 0 ? cfg.t : 2;
  const auto results = map_inputs<Rendered>(inputs, cfg.jobs, [&](const Input& in) {
    Rendered r;
    if (cfg.all) {
      r.json = Json::array();
      for (const auto& w : oracle_all_witnesses(in.graph, t, options)) {
        r.json.push_back(to_json(w));
        r.table += to_json(w).dump() + "\n";
      }
      if (r.json.empty()) r.table = "no socle witness for t = " + std::to_string(t) + "\n";
      return r;
    }
    const auto w = oracle_max_ideal_in_ass(in.graph, t, options);
    r.json = Json{{"t", t}, {"max_ideal_associated", w.has_value()},
                  {"witness", w ? to_json(w->weights) : Json(nullptr)}};
    if (w) {
      r.table = "maximal ideal associated to I^" + std::to_string(t) + "; witness a =";
      for (int x : w->weights.values()) r.table += " " + std::to_string(x);
      r.table += "\n";
    } else {
      r.table = "maximal ideal not associated to I^" + std::to_string(t) + "\n";
    }
    return r;
  });
  emit(cfg, inputs, results);
  return 0;
}

int cmd_compare(const Config& cfg) {
  std::vector<Input> inputs = load_inputs(cfg, true);
  for (int n = 2; n <= cfg.n_max; ++n)
    for (const Graph& g : connected_graphs(n)) inputs.push_back({"catalog", g});
  if (cfg.sample > 0) {
    if (cfg.n < 2) throw InputError("--sample needs --n of at least 2");
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < cfg.sample; ++k) inputs.push_back({"sample", random_connected_graph(cfg.n, rng)});
  }
  if (inputs.empty()) throw InputError("no inputs");
  CompareOptions options;
  options.t_max = cfg.t_max > 0 ? cfg.t_max : 4;
  options.jobs = cfg.jobs;
  options.oracle.guard_ops = cfg.guard_ops;
  std::vector<Graph> corpus;
  for (const auto& in : inputs) corpus.push_back(in.graph);
  spdlog::info("comparing {} graphs for t <= {}", corpus.size(), options.t_max);
  const CompareSummary summary = compare_corpus(corpus, options);

  Json j{{"graphs", summary.graphs},
         {"t_max", options.t_max},
         {"checks", summary.checks},
         {"mismatches", summary.mismatches},
         {"first_mismatch", summary.first ? Json(describe(*summary.first)) : Json(nullptr)}};
  std::ostringstream table;
  table << "graphs " << summary.graphs << "  checks " << summary.checks << "  mismatches "
        << summary.mismatches << "\n";
  if (summary.first) table << "first mismatch: " << describe(*summary.first) << "\n";
  // For a single graph, also report the first power whose associated primes
  // contain the maximal ideal, by both routes.
  if (corpus.size() == 1) {
    const Graph& g = corpus[0];
    Json engine = nullptr, oracle = nullptr;
    for (int t = 1; t <= options.t_max; ++t) {
      if (engine.is_null() && max_ideal_in_ass(g, t)) engine = t;
      if (oracle.is_null() && oracle_max_ideal_in_ass(g, t, options.oracle)) oracle = t;
    }
    j["max_ideal_from_t"] = Json{{"engine", engine}, {"oracle", oracle}};
    table << "maximal ideal first associated at t = " << (engine.is_null() ? "none" : engine.dump())
          << " (engine), " << (oracle.is_null() ? "none" : oracle.dump()) << " (oracle)\n";
    if (engine != oracle) {
      j["max_ideal_agrees"] = false;
      std::cout << (cfg.format == "json" ? j.dump() + "\n" : table.str());
      return 1;
    }
  }
  std::cout << (cfg.format == "json" ? j.dump() + "\n" : table.str());
  return summary.mismatches == 0 ? 0 : 1;
}

int cmd_sbases(const Config& cfg) {
  if (cfg.s < 1) throw InputError("--s must be at least 1");
  const auto bases = enumerate_minimal_sbases(cfg.s, cfg.n_max > 0 ? std::optional<int>(cfg.n_max) : std::nullopt);
  if (cfg.format == "json")
    std::cout << Json{{"s", cfg.s}, {"count", bases.size()}, {"bases", to_json(bases)}}.dump() << "\n";
  else
    std::cout << bases.size() << " minimal " << cfg.s << "-bases\n" << to_table(bases);
  return 0;
}

void add_graph_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("inputs", cfg.inputs, "Graph files (text or JSON); '-' reads standard input");
  cmd->add_option("--edges", cfg.edges, "Inline edge list such as 1-2,2-3,3-1");
  cmd->add_option("--n", cfg.n, "Vertex count for --edges (or --sample)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  Config cfg;
  CLI::App app{"Associated primes of powers of edge ideals"};
  app.require_subcommand(1);

  auto* ass = app.add_subcommand("ass", "Ass(I^t): minimal and embedded primes with witnesses");
  add_graph_options(ass, cfg);
  add_format(ass, cfg);
  ass->add_option("--t", cfg.t, "Power t")->check(CLI::PositiveNumber);
  ass->add_option("--t-max", cfg.t_max, "Report every power 1..t-max")->check(CLI::PositiveNumber);

  auto* mu = app.add_subcommand("mu-star", "phi*, mu* with an optimal ear decomposition, and s");
  add_graph_options(mu, cfg);
  add_format(mu, cfg);
  mu->add_option("--route", cfg.route, "ear (default) or weights")->check(CLI::IsMember({"ear", "weights"}));
  mu->add_option("--t-max", cfg.t_max, "Weight-search cap on mu*")->check(CLI::PositiveNumber);

  auto* stab = app.add_subcommand("stab", "Ass^infinity, per-prime indices and astab");
  add_graph_options(stab, cfg);
  add_format(stab, cfg);

  auto* socle = app.add_subcommand("socle", "Brute-force socle test for the maximal ideal");
  add_graph_options(socle, cfg);
  add_format(socle, cfg);
  socle->add_option("--t", cfg.t, "Power t (default 2)")->check(CLI::PositiveNumber);
  socle->add_option("--guard-ops", cfg.guard_ops, "Largest number of exponent vectors to scan");
  socle->add_flag("--widen", cfg.widen, "Scan a_i <= t instead of a_i <= t-1");
  socle->add_flag("--all", cfg.all, "List every witness");

  auto* compare = app.add_subcommand("compare", "Engine against socle oracle on a corpus");
  add_graph_options(compare, cfg);
  add_format(compare, cfg);
  compare->add_option("--t-max", cfg.t_max, "Largest power (default 4)")->check(CLI::PositiveNumber);
  compare->add_option("--n-max", cfg.n_max, "Add every connected graph on 2..n-max vertices")
      ->check(CLI::Range(0, 8));
  compare->add_option("--sample", cfg.sample, "Add this many random connected graphs on --n vertices")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--seed", cfg.seed, "mt19937_64 seed for --sample");
  compare->add_option("--guard-ops", cfg.guard_ops, "Oracle scan limit per (graph, t)");

  auto* sb = app.add_subcommand("sbases", "Catalog of minimal s-bases");
  add_format(sb, cfg);
  sb->add_option("--s", cfg.s, "The value s")->check(CLI::PositiveNumber);
  sb->add_option("--n-max", cfg.n_max, "Largest vertex count (default 3s)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ass) return cmd_ass(cfg);
    if (*mu) return cmd_mu_star(cfg);
    if (*stab) return cmd_stab(cfg);
    if (*socle) return cmd_socle(cfg);
    if (*compare) return cmd_compare(cfg);
    if (*sb) return cmd_sbases(cfg);
  } catch (const InputError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const PreconditionError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const ResourceError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::critical("internal error: {}", e.what());
    return 1;
  }
  return 2;
}
