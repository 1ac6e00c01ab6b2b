// Copyright 2026 The streamcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// streamcut command-line tool: generate, partition, bench, predict.
//
// Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "streamcut/graph.hpp"
#include "streamcut/metrics.hpp"
#include "streamcut/partition.hpp"
#include "streamcut/report.hpp"
#include "streamcut/synthgen.hpp"

namespace {

using namespace streamcut;

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

// Bad flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

// "n,alpha,beta,maxdeg[,seed]"; maxdeg 0 means n-1.
struct SyntheticArg {
  SyntheticSpec spec;
  bool has_seed = false;
};

SyntheticArg parse_synthetic(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
  if (parts.size() != 4 && parts.size() != 5) {
    throw UsageError("--synthetic expects n,alpha,beta,maxdeg[,seed], got \"" + text + "\"");
  }
  SyntheticArg arg;
  try {
    std::size_t used = 0;
    const auto whole = [&](const std::string& s) {
      if (used != s.size()) throw std::invalid_argument(s);
    };
    const unsigned long long n = std::stoull(parts[0], &used);
    whole(parts[0]);
    arg.spec.alpha = std::stod(parts[1], &used);
    whole(parts[1]);
    arg.spec.beta = std::stod(parts[2], &used);
    whole(parts[2]);
    arg.spec.max_degree = std::stoull(parts[3], &used);
    whole(parts[3]);
    if (parts.size() == 5) {
      arg.spec.seed = std::stoull(parts[4], &used);
      whole(parts[4]);
      arg.has_seed = true;
    }
    if (n > std::numeric_limits<VertexId>::max()) throw std::out_of_range(parts[0]);
    arg.spec.vertex_count = static_cast<VertexId>(n);
  } catch (const std::logic_error&) {
    throw UsageError("--synthetic has a malformed field: \"" + text + "\"");
  }
  try {
    validate(arg.spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--synthetic: ") + e.what());
  }
  return arg;
}

struct GraphSource {
  std::string input;
  std::string synthetic;

  void add_options(CLI::App& cmd) {
    auto* in = cmd.add_option("--input", input, "Edge-list file");
    auto* syn = cmd.add_option("--synthetic", synthetic, "n,alpha,beta,maxdeg[,seed]");
    in->excludes(syn);
  }

  void require() const {
    if (input.empty() && synthetic.empty()) {
      throw UsageError("one of --input or --synthetic is required");
    }
  }

  // Synthetic graphs use the run seed unless the tuple carries its own.
  Graph load(std::uint64_t run_seed) const {
    if (!input.empty()) return load_edge_list_file(input);
    SyntheticArg arg = parse_synthetic(synthetic);
    if (!arg.has_seed) arg.spec.seed = run_seed;
    return generate(arg.spec);
  }

  bool seed_dependent() const {
    return input.empty() && !parse_synthetic(synthetic).has_seed;
  }
};

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  auto out = open_output(path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

const std::vector<std::string> kAlgorithmNames{"random", "grid",   "balance",
                                               "random-degree", "degree", "degree-io"};
const std::vector<std::string> kOrderNames{"rnd", "bfs", "dfs"};

struct Cell {
  Algorithm algorithm;
  OrderKind order;
  std::uint32_t partitions;
  std::uint64_t seed;
};

struct CellResult {
  MetricsReport report;
  AssignmentLog log;
};

CellResult run_cell(const Graph& graph, const Cell& cell, bool timing, bool keep_log) {
  const auto start = std::chrono::steady_clock::now();
  RunResult run =
      run_partition(graph, {cell.order, cell.seed}, cell.algorithm, cell.partitions, cell.seed);
  const auto stop = std::chrono::steady_clock::now();
  CellResult out;
  out.report.algorithm = std::string(to_string(cell.algorithm));
  out.report.order = std::string(to_string(cell.order));
  out.report.partitions = cell.partitions;
  out.report.seed = cell.seed;
  out.report.replication_factor = replication_factor(run.state);
  out.report.imbalance_factor = imbalance_factor(run.state);
  out.report.runtime_ms =
      timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
  if (keep_log) out.log = std::move(run.log);
  return out;
}

std::string render(const std::vector<MetricsReport>& reports, const std::string& format) {
  return format == "json" ? to_json(reports) : to_csv(reports);
}

// ------------------------------------------------------------------ generate

struct GenerateOptions {
  std::string synthetic;
  std::uint64_t seed = 1;
  std::string output;
};

void add_generate(CLI::App& app, GenerateOptions& o) {
  auto* cmd = app.add_subcommand("generate", "Write a synthetic power-law graph");
  cmd->add_option("--synthetic", o.synthetic, "n,alpha,beta,maxdeg[,seed]")->required();
  cmd->add_option("--seed", o.seed, "Seed when the tuple has none");
  cmd->add_option("--output", o.output, "Edge-list path")->required();
}

int cmd_generate(const GenerateOptions& o) {
  SyntheticArg arg = parse_synthetic(o.synthetic);
  if (!arg.has_seed) arg.spec.seed = o.seed;
  const Graph graph = generate(arg.spec);
  auto out = open_output(o.output);
  write_edge_list(out, graph);
  out.close();
  if (!out) throw std::runtime_error("write failed: " + o.output);
  std::cout << "vertices " << graph.vertex_count() << "\nedges " << graph.edge_count() << "\n";
  return 0;
}

// ----------------------------------------------------------------- partition

struct PartitionOptions {
  GraphSource source;
  std::string algorithm = "degree-io";
  std::string order = "rnd";
  std::uint32_t partitions = 48;
  std::uint64_t seed = 1;
  std::string emit_assignments;
  std::string report;
  std::string format = "json";
  bool timing = false;
};

void add_partition(CLI::App& app, PartitionOptions& o) {
  auto* cmd = app.add_subcommand("partition", "Partition one graph and report metrics");
  o.source.add_options(*cmd);
  cmd->add_option("--algorithm", o.algorithm)->check(CLI::IsMember(kAlgorithmNames));
  cmd->add_option("--order", o.order)->check(CLI::IsMember(kOrderNames));
  cmd->add_option("--partitions", o.partitions)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed);
  cmd->add_option("--emit-assignments", o.emit_assignments, "Assignment log path");
  cmd->add_option("--report", o.report, "Report path (stdout if omitted)");
  cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--timing", o.timing, "Record wall-clock runtime_ms");
}

int cmd_partition(const PartitionOptions& o) {
  o.source.require();
  const Cell cell{*parse_algorithm(o.algorithm), *parse_order(o.order), o.partitions, o.seed};
  const Graph graph = o.source.load(o.seed);
  CellResult result = run_cell(graph, cell, o.timing, !o.emit_assignments.empty());
  if (cell.algorithm != Algorithm::Balance) {
    Cell baseline = cell;
    baseline.algorithm = Algorithm::Balance;
    result.report.improvement_pct =
        improvement(run_cell(graph, baseline, false, false).report.replication_factor,
                    result.report.replication_factor);
  }
  if (!o.emit_assignments.empty()) {
    auto out = open_output(o.emit_assignments);
    write_assignment_log(out, graph, result.log);
    out.close();
    if (!out) throw std::runtime_error("write failed: " + o.emit_assignments);
  }
  write_text(o.report, render({result.report}, o.format));
  return 0;
}

// --------------------------------------------------------------------- bench

struct BenchOptions {
  GraphSource source;
  std::vector<std::string> algorithms{"balance", "degree", "degree-io"};
  std::vector<std::string> orders{"rnd"};
  std::vector<std::uint32_t> partitions{48};
  std::vector<std::uint64_t> seeds{1};
  std::string report;
  std::string format = "csv";
  bool timing = false;
  unsigned jobs = 1;
};

void add_bench(CLI::App& app, BenchOptions& o) {
  auto* cmd = app.add_subcommand("bench", "Sweep algorithms x orders x partitions x seeds");
  o.source.add_options(*cmd);
  cmd->add_option("--algorithm", o.algorithms, "Algorithms (comma list)")
      ->delimiter(',')
      ->check(CLI::IsMember(kAlgorithmNames));
  cmd->add_option("--order", o.orders, "Orders (comma list)")
      ->delimiter(',')
      ->check(CLI::IsMember(kOrderNames));
  cmd->add_option("--partitions", o.partitions, "Partition counts (comma list)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seeds, "Seeds (comma list)")->delimiter(',');
  cmd->add_option("--report", o.report, "Report path (stdout if omitted)");
  cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--timing", o.timing, "Record wall-clock runtime_ms");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
}

void print_summary(std::ostream& err, const std::vector<MetricsReport>& rows,
                   const BenchOptions& o) {
  // Mean lambda per (order, p, algorithm) over seeds.
  std::map<std::tuple<std::string, std::uint32_t, std::string>, std::pair<double, int>> mean;
  for (const auto& r : rows) {
    auto& slot = mean[{r.order, r.partitions, r.algorithm}];
    slot.first += r.replication_factor;
    ++slot.second;
  }
  const auto lambda = [&](const std::string& order, std::uint32_t p,
                          const std::string& alg) -> std::optional<double> {
    auto it = mean.find({order, p, alg});
    if (it == mean.end()) return std::nullopt;
    return it->second.first / it->second.second;
  };
  err << "summary: mean improvement over balance (%)\n";
  for (const auto& alg : {std::string("degree"), std::string("degree-io")}) {
    for (const auto& order : o.orders) {
      err << "  " << alg << " " << order << ":";
      std::optional<double> previous;
      bool monotone = true;
      bool any = false;
      for (std::uint32_t p : o.partitions) {
        const auto base = lambda(order, p, "balance");
        const auto value = lambda(order, p, alg);
        if (!base || !value) continue;
        const double pct = improvement(*base, *value);
        err << " p=" << p << " " << format_double(pct);
        if (previous && pct < *previous) monotone = false;
        previous = pct;
        any = true;
      }
      if (any && o.partitions.size() > 1) err << (monotone ? " (non-decreasing)" : " (not monotone)");
      err << "\n";
    }
  }
}

int cmd_bench(const BenchOptions& o) {
  o.source.require();
  std::vector<std::uint64_t> graph_seeds;
  const bool per_seed_graph = o.source.seed_dependent();
  if (per_seed_graph) {
    graph_seeds = o.seeds;
  } else {
    graph_seeds = {o.seeds.front()};
  }
  std::sort(graph_seeds.begin(), graph_seeds.end());
  graph_seeds.erase(std::unique(graph_seeds.begin(), graph_seeds.end()), graph_seeds.end());
  std::map<std::uint64_t, Graph> graphs;
  for (std::uint64_t s : graph_seeds) graphs.emplace(s, o.source.load(s));
  const auto graph_for = [&](std::uint64_t seed) -> const Graph& {
    return graphs.at(per_seed_graph ? seed : graph_seeds.front());
  };

  // Requested cells in row order, then the implicit Balance baselines.
  std::vector<Cell> cells;
  for (const auto& a : o.algorithms) {
    for (const auto& ord : o.orders) {
      for (std::uint32_t p : o.partitions) {
        for (std::uint64_t s : o.seeds) {
          cells.push_back({*parse_algorithm(a), *parse_order(ord), p, s});
        }
      }
    }
  }
  const std::size_t requested = cells.size();
  const bool has_balance =
      std::find(o.algorithms.begin(), o.algorithms.end(), "balance") != o.algorithms.end();
  if (!has_balance) {
    for (const auto& ord : o.orders) {
      for (std::uint32_t p : o.partitions) {
        for (std::uint64_t s : o.seeds) cells.push_back({Algorithm::Balance, *parse_order(ord), p, s});
      }
    }
  }

  std::vector<MetricsReport> results(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::optional<std::string> failure;
  std::size_t failed_index = cells.size();
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = run_cell(graph_for(cells[i].seed), cells[i], o.timing, false).report;
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (i < failed_index) {
          failed_index = i;
          const Cell& c = cells[i];
          failure = "cell " + std::string(to_string(c.algorithm)) + "/" +
                    std::string(to_string(c.order)) + "/p=" + std::to_string(c.partitions) +
                    "/seed=" + std::to_string(c.seed) + " failed: " + e.what();
        }
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(o.jobs, cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) throw std::runtime_error(*failure);

  std::map<std::tuple<std::string, std::uint32_t, std::uint64_t>, double> baseline;
  for (const auto& r : results) {
    if (r.algorithm == "balance") baseline[{r.order, r.partitions, r.seed}] = r.replication_factor;
  }
  for (auto& r : results) {
    if (r.algorithm != "balance") {
      r.improvement_pct =
          improvement(baseline.at({r.order, r.partitions, r.seed}), r.replication_factor);
    }
  }
  print_summary(std::cerr, results, o);
  results.resize(requested);
  write_text(o.report, render(results, o.format));
  return 0;
}

// ------------------------------------------------------------------- predict

struct PredictOptions {
  GraphSource source;
  std::uint32_t partitions = 48;
  std::uint64_t seed = 1;
  std::string format;
};

void add_predict(CLI::App& app, PredictOptions& o) {
  auto* cmd = app.add_subcommand("predict", "Closed-form expected replication factors");
  o.source.add_options(*cmd);
  cmd->add_option("--partitions", o.partitions)->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for --synthetic without its own");
  cmd->add_option("--format", o.format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));
}

int cmd_predict(const PredictOptions& o) {
  o.source.require();
  const Graph graph = o.source.load(o.seed);
  const double random = predict_random(graph, o.partitions);
  const double random_degree = predict_random_degree(graph, o.partitions);
  if (o.format == "json") {
    std::cout << "{\n  \"p\": " << o.partitions << ",\n  \"predict_random\": "
              << format_double(random) << ",\n  \"predict_random_degree\": "
              << format_double(random_degree) << "\n}\n";
  } else {
    std::cout << "predict_random " << format_double(random) << "\npredict_random_degree "
              << format_double(random_degree) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streamcut: streaming vertex-cut graph partitioning"};
  app.require_subcommand(0, 1);
  GenerateOptions generate_opts;
  PartitionOptions partition_opts;
  BenchOptions bench_opts;
  PredictOptions predict_opts;
  add_generate(app, generate_opts);
  add_partition(app, partition_opts);
  add_bench(app, bench_opts);
  add_predict(app, predict_opts);

  // Bare flags without a subcommand mean "partition".
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && args.front().rfind("--", 0) == 0 && args.front() != "--help" &&
      args.front() != "--version") {
    args.insert(args.begin(), "partition");
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (app.got_subcommand("generate")) return cmd_generate(generate_opts);
    if (app.got_subcommand("bench")) return cmd_bench(bench_opts);
    if (app.got_subcommand("predict")) return cmd_predict(predict_opts);
    if (app.got_subcommand("partition")) return cmd_partition(partition_opts);
    std::cerr << app.help();
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}
