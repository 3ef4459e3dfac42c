#pragma once

// The `netthermo` command-line front end. Kept in a header so the test suite
// can drive it in-process; tools/netthermo.cpp is a thin main().
//
// Exit codes: 0 success, 2 validation failure, 3 I/O failure.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "netthermo/errors.hpp"
#include "netthermo/exchange_sim.hpp"
#include "netthermo/io.hpp"
#include "netthermo/merge.hpp"
#include "netthermo/network.hpp"
#include "netthermo/oracle.hpp"
#include "netthermo/published_ledger.hpp"
#include "netthermo/serialize.hpp"
#include "netthermo/thermo.hpp"
#include "netthermo/transfer.hpp"

namespace netthermo::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_validation = 2,
  exit_io = 3,
};

inline constexpr const char* oracle_cap_env = "NETTHERMO_ORACLE_CAP";

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"analyze", "merge", "carnot", "equilibrium", "simulate", "batch"};
  return names;
}

inline OracleLimits oracle_limits_from_env() {
  OracleLimits limits;
  if (const char* raw = std::getenv(oracle_cap_env); raw != nullptr && *raw != '\0') {
    std::uint64_t cap = 0;
    if (!netthermo::detail::parse_u64(raw, cap) || cap == 0) {
      throw ValidationError(std::string(oracle_cap_env) + " must be a positive integer (got '" + raw + "')");
    }
    limits.cap = cap;
  }
  return limits;
}

namespace detail {

struct Options {
  std::string format = "json";
  std::string units = "nats";
  bool show_ledger = false;

  std::uint64_t nodes = 0, links = 0;
  std::uint64_t nodes1 = 0, links1 = 0, nodes2 = 0, links2 = 0;

  double quanta = 0.0;
  std::optional<double> n_hot, n_cold;
  std::optional<std::uint64_t> hot_nodes, hot_links, cold_nodes, cold_links;

  std::uint64_t k1 = 0, k2 = 0, r = 0;
  std::uint64_t steps = 1000000;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> burn_in;
  std::uint64_t stride = 1;
  std::uint64_t initial = 0;
  std::string out_csv;

  std::string inventory;
  bool strict = false;

  [[nodiscard]] EntropyUnit unit() const { return units == "bits" ? EntropyUnit::bits : EntropyUnit::nats; }
};

inline void add_ledger(OutputDocument& doc, const Options& opt) {
  if (!opt.show_ledger) {
    return;
  }
  for (const auto& e : published_example_ledger()) {
    doc.warnings.push_back(describe(e));
  }
}

inline OutputDocument analyze_document(const Network& net, const Options& opt) {
  OutputDocument doc;
  doc.command = "analyze";
  doc.units = opt.unit();
  doc.inputs = {{"nodes", net.nodes()}, {"links", net.links()}};
  doc.results = to_json(report(net), doc.units);
  add_ledger(doc, opt);
  return doc;
}

inline OutputDocument cmd_analyze(const Options& opt) { return analyze_document(Network(opt.nodes, opt.links), opt); }

inline OutputDocument cmd_merge(const Options& opt) {
  const Network a(opt.nodes1, opt.links1);
  const Network b(opt.nodes2, opt.links2);
  OutputDocument doc;
  doc.command = "merge";
  doc.units = opt.unit();
  doc.inputs = {{"nodes1", opt.nodes1}, {"links1", opt.links1}, {"nodes2", opt.nodes2}, {"links2", opt.links2}};
  doc.results = to_json(merge_report(a, b), doc.units);
  add_ledger(doc, opt);
  return doc;
}

inline OutputDocument cmd_carnot(const Options& opt) {
  const bool by_occupation = opt.n_hot || opt.n_cold;
  const bool by_network = opt.hot_nodes || opt.hot_links || opt.cold_nodes || opt.cold_links;
  if (by_occupation == by_network) {
    throw ValidationError("carnot: give either --n-hot/--n-cold or --hot-nodes/--hot-links/--cold-nodes/--cold-links");
  }
  OutputDocument doc;
  doc.command = "carnot";
  doc.units = opt.unit();
  TransferQuote q;
  if (by_occupation) {
    if (!opt.n_hot || !opt.n_cold) {
      throw ValidationError("carnot: both --n-hot and --n-cold are required");
    }
    doc.inputs = {{"q", opt.quanta}, {"n_hot", *opt.n_hot}, {"n_cold", *opt.n_cold}};
    q = quote(opt.quanta, *opt.n_hot, *opt.n_cold);
  } else {
    if (!opt.hot_nodes || !opt.hot_links || !opt.cold_nodes || !opt.cold_links) {
      throw ValidationError("carnot: --hot-nodes, --hot-links, --cold-nodes and --cold-links are all required");
    }
    doc.inputs = {{"q", opt.quanta},
                  {"hot_nodes", *opt.hot_nodes},
                  {"hot_links", *opt.hot_links},
                  {"cold_nodes", *opt.cold_nodes},
                  {"cold_links", *opt.cold_links}};
    q = quote(opt.quanta, Network(*opt.hot_nodes, *opt.hot_links), Network(*opt.cold_nodes, *opt.cold_links));
    if (q.orientation == Orientation::swapped) {
      doc.warnings.emplace_back("networks swapped: the network given as cold has the higher occupation");
    }
  }
  if (q.max_profit_exact < 0.0) {
    doc.warnings.emplace_back("direction reversed: work required");
  }
  doc.results = to_json(q, doc.units);
  add_ledger(doc, opt);
  return doc;
}

inline OutputDocument cmd_equilibrium(const Options& opt, const OracleLimits& limits) {
  OutputDocument doc;
  doc.command = "equilibrium";
  doc.units = opt.unit();
  doc.inputs = {{"k1", opt.k1}, {"k2", opt.k2}, {"r", opt.r}};
  try {
    doc.results = to_json(partition_distribution(opt.k1, opt.k2, opt.r, limits), doc.units);
  } catch (const CapExceededError& e) {
    throw CapExceededError(std::string(e.what()) + " (hint: `netthermo simulate` samples the same distribution)");
  }
  add_ledger(doc, opt);
  return doc;
}

inline OutputDocument cmd_simulate(const Options& opt, const OracleLimits& limits) {
  SimConfig config = SimConfig::with_defaults(opt.k1, opt.k2, opt.r, opt.steps, opt.seed);
  if (opt.burn_in) {
    config.burn_in = *opt.burn_in;
  }
  config.sample_stride = opt.stride;
  config.initial_links_left = opt.initial;
  config.validate();

  const Trajectory t = run_exchange(config);
  const SimSummary s = summarize(t, config.pool_states_left, config.pool_states_right, limits);
  if (!opt.out_csv.empty()) {
    write_trajectory_csv(opt.out_csv, t);
  }

  OutputDocument doc;
  doc.command = "simulate";
  doc.units = opt.unit();
  doc.inputs = {{"k1", config.pool_states_left}, {"k2", config.pool_states_right}, {"r", config.total_links},
                {"initial_links_left", config.initial_links_left}, {"steps", config.steps},
                {"burn_in", config.burn_in}, {"stride", config.sample_stride}, {"seed", config.seed},
                {"out_csv", opt.out_csv.empty() ? json(nullptr) : json(opt.out_csv)}};
  json r;
  r["rng_algorithm"] = t.rng;
  r["seed"] = t.seed;
  r["retained_samples"] = t.samples.size();
  r["acceptance_rate"] = t.acceptance_rate;
  r["mean_links_left"] = s.mean_links_left;
  r["stderr_links_left"] = s.stderr_links_left;
  r["mean_occupation_left"] = s.mean_occupation_left;
  r["mean_occupation_right"] = s.mean_occupation_right;
  r["tv_distance_to_exact"] = s.tv_distance_to_exact ? json(*s.tv_distance_to_exact) : json(nullptr);
  r["histogram"] = t.histogram;
  doc.results = std::move(r);
  if (!s.tv_distance_to_exact) {
    doc.warnings.emplace_back("exact reference skipped: R + K1 + K2 exceeds the oracle cap");
  }
  add_ledger(doc, opt);
  return doc;
}

struct BatchOutput {
  std::vector<OutputDocument> documents;
};

inline BatchOutput cmd_batch(const Options& opt) {
  const Inventory inv = read_inventory(opt.inventory);
  if (opt.strict && !inv.errors.empty()) {
    const auto& e = inv.errors.front();
    throw ValidationError("batch: row " + std::to_string(e.row) + ": " + e.message);
  }
  BatchOutput out;
  json rows = json::array();
  Options row_opt = opt;
  row_opt.show_ledger = false;
  for (const auto& row : inv.rows) {
    auto doc = analyze_document(Network(row.nodes, row.links), row_opt);
    doc.inputs["name"] = row.name;
    doc.inputs["row"] = row.row;
    out.documents.push_back(std::move(doc));
  }
  OutputDocument summary;
  summary.command = "batch";
  summary.units = opt.unit();
  summary.inputs = {{"path", opt.inventory}, {"strict", opt.strict}};
  json skipped = json::array();
  for (const auto& e : inv.errors) {
    skipped.push_back({{"row", e.row}, {"message", e.message}});
    summary.warnings.push_back("row " + std::to_string(e.row) + " skipped: " + e.message);
  }
  summary.results = {{"count", inv.rows.size()}, {"skipped", std::move(skipped)}};
  add_ledger(summary, opt);
  out.documents.push_back(std::move(summary));
  return out;
}

// A batch is always a stream (NDJSON / document column), even with one document.
inline void render(const std::vector<OutputDocument>& docs, const std::string& format, bool stream,
                   std::ostream& out) {
  if (format == "json") {
    for (const auto& d : docs) {
      out << round_numbers(to_json(d)).dump(stream ? -1 : 2) << '\n';
    }
    return;
  }
  if (format == "csv") {
    out << (stream ? "document,key,value\n" : "key,value\n");
    for (std::size_t i = 0; i < docs.size(); ++i) {
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(to_json(docs[i]), "", flat);
      for (const auto& [k, v] : flat) {
        if (stream) {
          out << i << ',';
        }
        out << csv_field(k) << ',' << csv_field(v) << '\n';
      }
    }
    return;
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) {
      out << '\n';
    }
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(to_json(docs[i]), "", flat);
    for (const auto& [k, v] : flat) {
      out << k << ": " << v << '\n';
    }
  }
}

} // namespace detail

/// Runs the CLI with the given argument vector (argv[0] is the program name).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Options opt;
  CLI::App app{"Thermodynamics of communication networks modeled as a bosonic link gas"};
  app.name("netthermo");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--units", opt.units, "Entropy unit")->check(CLI::IsMember({"nats", "bits"}));
  app.add_flag("--show-paper-ledger", opt.show_ledger,
               "List the published example values beside the recomputed ones in warnings");

  auto* analyze = app.add_subcommand("analyze", "Thermodynamic report for one network");
  analyze->add_option("--nodes", opt.nodes, "Node count N (>= 2)")->required();
  analyze->add_option("--links", opt.links, "Link-quanta count R")->required();

  auto* merge = app.add_subcommand("merge", "Merge two networks and report the entropy change");
  merge->add_option("--nodes1", opt.nodes1)->required();
  merge->add_option("--links1", opt.links1)->required();
  merge->add_option("--nodes2", opt.nodes2)->required();
  merge->add_option("--links2", opt.links2)->required();

  auto* carnot = app.add_subcommand("carnot", "Carnot bound for moving Q quanta from a hot to a cold network");
  carnot->add_option("--q", opt.quanta, "Quanta moved from the hot network")->required();
  carnot->add_option("--n-hot", opt.n_hot, "Hot occupation");
  carnot->add_option("--n-cold", opt.n_cold, "Cold occupation");
  carnot->add_option("--hot-nodes", opt.hot_nodes);
  carnot->add_option("--hot-links", opt.hot_links);
  carnot->add_option("--cold-nodes", opt.cold_nodes);
  carnot->add_option("--cold-links", opt.cold_links);

  auto* equilibrium = app.add_subcommand("equilibrium", "Exact distribution of R links over two state pools");
  equilibrium->add_option("--k1", opt.k1, "States in the left pool")->required();
  equilibrium->add_option("--k2", opt.k2, "States in the right pool")->required();
  equilibrium->add_option("--r", opt.r, "Total links")->required();

  auto* simulate = app.add_subcommand("simulate", "Metropolis sampling of link exchange between two pools");
  simulate->add_option("--k1", opt.k1, "States in the left pool")->required();
  simulate->add_option("--k2", opt.k2, "States in the right pool")->required();
  simulate->add_option("--r", opt.r, "Total links")->required();
  simulate->add_option("--steps", opt.steps, "Chain steps, burn-in included");
  simulate->add_option("--seed", opt.seed, "PRNG seed (mt19937_64)");
  simulate->add_option("--burn-in", opt.burn_in, "Discarded leading steps (default: 1% of steps)");
  simulate->add_option("--stride", opt.stride, "Keep every stride-th step after burn-in");
  simulate->add_option("--initial", opt.initial, "Links initially in the left pool");
  simulate->add_option("--out-csv", opt.out_csv, "Write the trajectory (step_index,links_left) here");

  auto* batch = app.add_subcommand("batch", "Analyze every network in a name,nodes,links CSV");
  batch->add_option("input", opt.inventory, "Inventory CSV path")->required();
  batch->add_flag("--strict", opt.strict, "Fail on the first malformed row instead of skipping it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return exit_validation;
  }

  try {
    const OracleLimits limits = oracle_limits_from_env();
    std::vector<OutputDocument> docs;
    if (analyze->parsed()) {
      docs.push_back(detail::cmd_analyze(opt));
    } else if (merge->parsed()) {
      docs.push_back(detail::cmd_merge(opt));
    } else if (carnot->parsed()) {
      docs.push_back(detail::cmd_carnot(opt));
    } else if (equilibrium->parsed()) {
      docs.push_back(detail::cmd_equilibrium(opt, limits));
    } else if (simulate->parsed()) {
      docs.push_back(detail::cmd_simulate(opt, limits));
    } else if (batch->parsed()) {
      docs = detail::cmd_batch(opt).documents;
    }
    detail::render(docs, opt.format, batch->parsed(), out);
    return exit_ok;
  } catch (const IoError& e) {
    err << "netthermo: I/O error: " << e.what() << '\n';
    return exit_io;
  } catch (const ValidationError& e) {
    err << "netthermo: " << e.what() << '\n';
    return exit_validation;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("netthermo");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace netthermo::cli
