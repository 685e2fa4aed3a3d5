// Copyright 2026 The WGP Authors
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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wgp/bounds.h"
#include "wgp/generators.h"
#include "wgp/io.h"
#include "wgp/model.h"
#include "wgp/oracle.h"
#include "wgp/schedulers.h"

namespace wgp::cli {
namespace {

namespace fs = std::filesystem;

// Thrown for argument combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Writes to `path`, or to `out` when no path was given.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

Instance LoadInstance(const std::string& path) {
  return InstanceFromJson(ReadTextFile(path));
}

std::string Summary(const Instance& instance) {
  const Network& n = instance.network();
  std::ostringstream s;
  s << "nodes=" << n.node_count() << " edges=" << n.edges().size()
    << " packets=" << instance.packet_count()
    << " d_I=" << n.interference_radius()
    << " gamma/gamma0=" << FormatRational(n.gamma_ratio()) << "\n";
  return s.str();
}

// Smallest integer speed covered by the speed-optimality guarantee.
int GuaranteedSigma(const Network& network) {
  const Rational ratio = network.gamma_ratio() + 1;
  return static_cast<int>((ratio.numerator() + ratio.denominator() - 1) /
                          ratio.denominator());
}

std::vector<std::pair<int, int>> ParseEdgeList(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw UsageError("edge \"" + item + "\" is not of the form a-b");
    }
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)),
                         std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw UsageError("edge \"" + item + "\" is not of the form a-b");
    }
  }
  return edges;
}

////////////////////////////////////////////////////////////////////////////////
// generate
////////////////////////////////////////////////////////////////////////////////

struct GenerateArgs {
  std::string topology;
  StandardParams standard;
  std::string origin = "fixed";
  std::string release = "zero";
  std::optional<std::uint64_t> seed;
  int phases = 1;
  int k = 1;
  int u_size = 0;
  int v_size = 0;
  std::string edges;
  int extra_u = 1;
  int extra_v = 1;
  double planted_probability = 0.3;
  std::string output;
};

void AddGenerate(CLI::App& app, GenerateArgs& a) {
  auto* cmd = app.add_subcommand("generate", "Write an instance file");
  cmd->alias("gen");
  cmd->add_option("--topology", a.topology,
                  "line | star | grid | random | trap | ibm")
      ->required();
  cmd->add_option("--nodes", a.standard.nodes, "Node count (line/star/random)");
  cmd->add_option("--rows", a.standard.rows, "Grid rows");
  cmd->add_option("--cols", a.standard.cols, "Grid columns");
  cmd->add_option("--edge-prob", a.standard.edge_probability,
                  "Edge probability for random graphs");
  cmd->add_option("--d-i", a.standard.interference_radius,
                  "Interference radius");
  cmd->add_option("--packets", a.standard.packets, "Packet count");
  cmd->add_option("--origin", a.origin, "fixed | uniform | each");
  cmd->add_option("--origin-node", a.standard.origin_node,
                  "Origin for --origin fixed (default: highest node)");
  cmd->add_option("--release", a.release, "zero | spaced");
  cmd->add_option("--mean-gap", a.standard.mean_gap,
                  "Mean release gap for --release spaced");
  cmd->add_option("--phases", a.phases, "Phases (trap, ibm)");
  cmd->add_option("--k", a.k, "Matching size (ibm)");
  cmd->add_option("--u", a.u_size, "U side size for an explicit ibm graph");
  cmd->add_option("--v", a.v_size, "V side size for an explicit ibm graph");
  cmd->add_option("--edges", a.edges,
                  "Explicit ibm bipartite edges, e.g. 0-0,1-1");
  cmd->add_option("--extra-u", a.extra_u, "Extra U nodes of a planted graph");
  cmd->add_option("--extra-v", a.extra_v, "Extra V nodes of a planted graph");
  cmd->add_option("--planted-prob", a.planted_probability,
                  "Extra edge probability of a planted graph");
  cmd->add_option("--seed", a.seed, "Random seed (required when random)");
  cmd->add_option("-o,--output", a.output, "Output file (default: stdout)");
}

std::uint64_t RequireSeed(const GenerateArgs& a, std::string_view why) {
  if (!a.seed) {
    throw UsageError("--seed is required for " + std::string(why));
  }
  return *a.seed;
}

int RunGenerate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<Instance> instance;
  if (a.topology == "trap") {
    instance = GenerateTrap(a.phases);
  } else if (a.topology == "ibm") {
    if (!a.edges.empty()) {
      BipartiteGraph graph{a.u_size, a.v_size, ParseEdgeList(a.edges)};
      instance = GenerateIbmReduction(graph, a.k, a.phases).instance;
    } else {
      const std::uint64_t seed = RequireSeed(a, "a planted ibm graph");
      const PlantedGraph planted = PlantInducedMatching(
          a.k, a.extra_u, a.extra_v, a.planted_probability, seed);
      const IbmReduction reduction =
          GenerateIbmReduction(planted.graph, a.k, a.phases);
      instance = Instance(reduction.instance.network(),
                          {reduction.instance.packets().begin(),
                           reduction.instance.packets().end()},
                          reduction.instance.comment() +
                              " planted seed=" + std::to_string(seed));
    }
  } else {
    StandardParams params = a.standard;
    params.topology = ParseTopology(a.topology);
    params.origin = ParseOriginPolicy(a.origin);
    params.release = ParseReleasePolicy(a.release);
    const bool random = params.topology == Topology::kRandom ||
                        params.origin == OriginPolicy::kUniform ||
                        params.release == ReleasePolicy::kSpaced;
    const std::uint64_t seed =
        random ? RequireSeed(a, "random topologies, origins or releases")
               : a.seed.value_or(0);
    instance = GenerateStandard(params, seed);
  }
  Emit(a.output, InstanceToJson(*instance), out);
  (a.output.empty() ? err : out) << Summary(*instance);
  return kExitOk;
}

////////////////////////////////////////////////////////////////////////////////
// run
////////////////////////////////////////////////////////////////////////////////

struct RunArgs {
  std::string algo = "fifo";
  std::optional<int> sigma;
  std::string instance;
  std::string output;
  bool verbose = false;
};

void AddRun(CLI::App& app, RunArgs& a) {
  auto* cmd = app.add_subcommand("run", "Run a scheduler on an instance");
  cmd->add_option("--algo", a.algo, "fifo | pg-r | sigma-fifo");
  cmd->add_option("--sigma", a.sigma, "Speed for sigma-fifo");
  cmd->add_option("instance", a.instance, "Instance file")->required();
  cmd->add_option("-o,--output", a.output, "Schedule trace file");
  cmd->add_flag("--verbose", a.verbose, "Per-packet table");
}

GreedyRun RunAlgorithm(const Instance& instance, const std::string& algo,
                       std::optional<int> sigma) {
  if (algo == "fifo") return Fifo(instance);
  if (algo == "pg-r") {
    return PriorityGreedy(instance, AdjustedReleasePriority(instance));
  }
  if (algo == "sigma-fifo") {
    if (!sigma) throw UsageError("sigma-fifo needs --sigma");
    if (*sigma < 1) {
      throw InvalidArgumentError("sigma must be at least 1, got " +
                                 std::to_string(*sigma));
    }
    return SigmaFifo(instance, *sigma);
  }
  throw UsageError("unknown algorithm \"" + algo + "\"");
}

void PrintMetrics(const ScheduleMetrics& metrics, std::ostream& out) {
  out << "max_completion: " << FormatRationalWithDecimal(metrics.max_completion)
      << "\n"
      << "max_flow: " << FormatRationalWithDecimal(metrics.max_flow) << "\n"
      << "rounds: " << metrics.round_count << "\n";
}

void PrintPacketTable(const Instance& instance, const ScheduleMetrics& metrics,
                      std::ostream& out) {
  out << "packet origin release hops completion flow\n";
  for (PacketId j = 0; j < instance.packet_count(); ++j) {
    out << j << " " << instance.packet(j).origin << " "
        << instance.packet(j).release << " " << instance.hop_distance(j) << " "
        << FormatRational(metrics.completion[j]) << " "
        << FormatRational(metrics.flow[j]) << "\n";
  }
}

int RunRun(const RunArgs& a, std::ostream& out) {
  const Instance instance = LoadInstance(a.instance);
  const GreedyRun run = RunAlgorithm(instance, a.algo, a.sigma);
  const ScheduleMetrics metrics = ValidateSchedule(instance, run.schedule);
  out << "algo: " << a.algo << "\n"
      << "sigma: " << run.schedule.sigma << "\n";
  PrintMetrics(metrics, out);
  if (a.verbose) PrintPacketTable(instance, metrics, out);
  if (!a.output.empty()) WriteTextFile(a.output, ScheduleToJson(run.schedule));
  return kExitOk;
}

////////////////////////////////////////////////////////////////////////////////
// exact
////////////////////////////////////////////////////////////////////////////////

struct ExactArgs {
  std::string objective = "completion";
  std::optional<std::int64_t> budget;
  int max_packets = OracleOptions{}.max_packets;
  int max_nodes = OracleOptions{}.max_nodes;
  bool no_packing_bound = false;
  std::string instance;
  std::string output;
};

void AddExact(CLI::App& app, ExactArgs& a) {
  auto* cmd = app.add_subcommand("exact", "Solve an instance to optimality");
  cmd->add_option("--objective", a.objective, "completion | flow");
  cmd->add_option("--budget", a.budget,
                  "Search node budget (default: WGP_NODE_BUDGET or 10^7)");
  cmd->add_option("--max-packets", a.max_packets, "Packet count guard");
  cmd->add_option("--max-nodes", a.max_nodes, "Node count guard");
  cmd->add_flag("--no-packing-bound", a.no_packing_bound,
                "Disable the packing lower-bound prune");
  cmd->add_option("instance", a.instance, "Instance file")->required();
  cmd->add_option("-o,--output", a.output, "Optimal schedule trace file");
}

Objective ParseObjective(const std::string& name) {
  if (name == "completion") return Objective::kMaxCompletion;
  if (name == "flow") return Objective::kMaxFlow;
  throw UsageError("unknown objective \"" + name + "\"");
}

OracleOptions MakeOracleOptions(std::optional<std::int64_t> budget) {
  OracleOptions options;
  options.node_budget =
      budget.value_or(NodeBudgetFromEnvironment(kDefaultNodeBudget));
  if (options.node_budget < 1) {
    throw InvalidArgumentError("budget must be positive");
  }
  return options;
}

int RunExact(const ExactArgs& a, std::ostream& out) {
  const Instance instance = LoadInstance(a.instance);
  const Objective objective = ParseObjective(a.objective);
  OracleOptions options = MakeOracleOptions(a.budget);
  options.max_packets = a.max_packets;
  options.max_nodes = a.max_nodes;
  options.use_packing_bound = !a.no_packing_bound;
  const OracleResult result = SolveExact(instance, objective, options);
  out << "objective: " << ObjectiveName(objective) << "\n";
  if (result.status == OracleStatus::kUnknown) {
    out << "value: unknown (lower " << FormatRational(result.lower_bound)
        << ", upper " << FormatRational(result.upper_bound) << ")\n"
        << "nodes_explored: " << result.nodes_explored << "\n";
    return kExitOracleUnknown;
  }
  out << "value: " << FormatRational(result.value) << "\n"
      << "nodes_explored: " << result.nodes_explored << "\n";
  if (!a.output.empty()) WriteTextFile(a.output, ScheduleToJson(result.schedule));
  return kExitOk;
}

////////////////////////////////////////////////////////////////////////////////
// validate
////////////////////////////////////////////////////////////////////////////////

struct ValidateArgs {
  std::string instance;
  std::string schedule;
  bool verbose = false;
};

void AddValidate(CLI::App& app, ValidateArgs& a) {
  auto* cmd = app.add_subcommand("validate", "Replay and check a schedule");
  cmd->add_option("instance", a.instance, "Instance file")->required();
  cmd->add_option("schedule", a.schedule, "Schedule trace file")->required();
  cmd->add_flag("--verbose", a.verbose, "Per-packet table");
}

int RunValidate(const ValidateArgs& a, std::ostream& out) {
  const Instance instance = LoadInstance(a.instance);
  const Schedule schedule = ScheduleFromJson(ReadTextFile(a.schedule));
  const ScheduleMetrics metrics = ValidateSchedule(instance, schedule);
  out << "valid\n"
      << "sigma: " << schedule.sigma << "\n";
  PrintMetrics(metrics, out);
  if (a.verbose) PrintPacketTable(instance, metrics, out);
  return kExitOk;
}

////////////////////////////////////////////////////////////////////////////////
// bounds
////////////////////////////////////////////////////////////////////////////////

struct BoundsArgs {
  std::string algo = "fifo";
  std::string instance;
  bool csv = false;
};

void AddBounds(CLI::App& app, BoundsArgs& a) {
  auto* cmd = app.add_subcommand(
      "bounds", "Per-packet completion upper bounds and the best lower bound");
  cmd->add_option("--algo", a.algo, "fifo | pg-r");
  cmd->add_option("instance", a.instance, "Instance file")->required();
  cmd->add_flag("--csv", a.csv, "CSV rows instead of a table");
}

int RunBounds(const BoundsArgs& a, std::ostream& out) {
  if (a.algo != "fifo" && a.algo != "pg-r") {
    throw UsageError("bounds supports --algo fifo or pg-r");
  }
  const Instance instance = LoadInstance(a.instance);
  const GreedyRun run = RunAlgorithm(instance, a.algo, std::nullopt);
  const auto rows = UpperBoundTable(instance, run);
  const BlockingForest forest = BuildBlockingForest(instance, run);
  const char sep = a.csv ? ',' : ' ';
  out << "packet" << sep << "completion" << sep << "upper_bound" << sep
      << "slack" << sep << "root\n";
  for (const UpperBoundRow& row : rows) {
    out << row.packet << sep << FormatRational(row.completion) << sep
        << FormatRational(row.upper_bound) << sep << FormatRational(row.slack)
        << sep << forest.Root(row.packet) << "\n";
  }
  if (!a.csv && instance.packet_count() > 0) {
    out << "best_lower_bound: "
        << FormatRational(BestTreeLowerBound(instance, forest)) << "\n";
  }
  return kExitOk;
}

////////////////////////////////////////////////////////////////////////////////
// compare
////////////////////////////////////////////////////////////////////////////////

struct CompareArgs {
  std::string directory;
  std::string algos = "fifo,sigma-fifo";
  std::optional<int> sigma;
  std::optional<std::int64_t> budget;
  int jobs = 1;
  std::string output;
};

void AddCompare(CLI::App& app, CompareArgs& a) {
  auto* cmd = app.add_subcommand(
      "compare", "Schedulers against the exact optimum over a directory");
  cmd->add_option("directory", a.directory, "Directory of instance files")
      ->required();
  cmd->add_option("--algos", a.algos, "Comma-separated: fifo,pg-r,sigma-fifo");
  cmd->add_option("--sigma", a.sigma,
                  "Speed for sigma-fifo (default: ceil(gamma/gamma0) + 1)");
  cmd->add_option("--budget", a.budget, "Oracle node budget");
  cmd->add_option("--jobs", a.jobs, "Worker threads");
  cmd->add_option("-o,--output", a.output, "CSV file (default: stdout)");
}

struct CompareOutcome {
  std::string rows;
  bool unknown = false;
  bool violated = false;
};

std::string Cell(const std::optional<Rational>& value) {
  return value ? FormatRational(*value) : "unknown";
}

CompareOutcome CompareOne(const fs::path& file,
                          const std::vector<std::string>& algos,
                          std::optional<int> sigma_override,
                          const OracleOptions& options) {
  const Instance instance = LoadInstance(file.string());
  const Network& network = instance.network();
  CompareOutcome outcome;

  std::optional<Rational> opt_completion, opt_flow;
  try {
    const OracleResult c = SolveExact(instance, Objective::kMaxCompletion, options);
    const OracleResult f = SolveExact(instance, Objective::kMaxFlow, options);
    if (c.status == OracleStatus::kOptimal) opt_completion = c.value;
    if (f.status == OracleStatus::kOptimal) opt_flow = f.value;
  } catch (const InvalidArgumentError&) {
    // Too large for the oracle: reported as unknown.
  }
  outcome.unknown = !opt_completion || !opt_flow;

  const Rational ratio = network.gamma_ratio();
  for (const std::string& algo : algos) {
    std::optional<int> sigma;
    if (algo == "sigma-fifo") {
      sigma = sigma_override.value_or(GuaranteedSigma(network));
    }
    const GreedyRun run = RunAlgorithm(instance, algo, sigma);
    const ScheduleMetrics metrics = ValidateSchedule(instance, run.schedule);

    // Proven factors: FIFO (1 + g) for completion and (1 + g m) for flow;
    // sigma-FIFO at sigma >= g + 1 is within the unit-speed optimum.
    std::optional<Rational> completion_factor, flow_factor;
    if (algo == "fifo") {
      completion_factor = 1 + ratio;
      flow_factor = 1 + ratio * instance.packet_count();
    } else if (algo == "sigma-fifo" && Rational(*sigma) >= ratio + 1) {
      completion_factor = Rational(1);
      flow_factor = Rational(1);
    }
    auto ratio_cell = [](const Rational& value,
                         const std::optional<Rational>& opt) -> std::string {
      if (!opt) return "unknown";
      if (*opt == Rational(0)) return value == Rational(0) ? "1" : "inf";
      return FormatRational(value / *opt);
    };
    auto within = [&](const Rational& value, const std::optional<Rational>& opt,
                      const std::optional<Rational>& factor) -> std::string {
      if (!factor) return "-";
      if (!opt) return "unknown";
      const bool ok = value <= *factor * *opt;
      if (!ok) outcome.violated = true;
      return ok ? "yes" : "no";
    };
    std::ostringstream row;
    row << file.filename().string() << "," << algo << ","
        << run.schedule.sigma << "," << FormatRational(metrics.max_completion)
        << "," << FormatRational(metrics.max_flow) << ","
        << Cell(opt_completion) << "," << Cell(opt_flow) << ","
        << ratio_cell(metrics.max_completion, opt_completion) << ","
        << ratio_cell(metrics.max_flow, opt_flow) << ","
        << (completion_factor ? FormatRational(*completion_factor) : "-")
        << "," << (flow_factor ? FormatRational(*flow_factor) : "-") << ","
        << within(metrics.max_completion, opt_completion, completion_factor)
        << "," << within(metrics.max_flow, opt_flow, flow_factor) << "\n";
    outcome.rows += row.str();
  }
  return outcome;
}

int RunCompare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> algos;
  {
    std::stringstream list(a.algos);
    std::string item;
    while (std::getline(list, item, ',')) {
      if (item.empty()) continue;
      if (item != "fifo" && item != "pg-r" && item != "sigma-fifo") {
        throw UsageError("unknown algorithm \"" + item + "\"");
      }
      algos.push_back(item);
    }
  }
  if (algos.empty()) throw UsageError("--algos is empty");
  if (a.sigma && *a.sigma < 1) {
    throw InvalidArgumentError("sigma must be at least 1");
  }
  if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (!fs::is_directory(a.directory)) {
    throw Error("not a directory: " + a.directory);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  const OracleOptions options = MakeOracleOptions(a.budget);

  // Results land in input order whatever the thread interleaving.
  std::vector<CompareOutcome> outcomes(files.size());
  std::vector<std::exception_ptr> failures(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        outcomes[i] = CompareOne(files[i], algos, a.sigma, options);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min<int>(a.jobs, std::max<std::size_t>(files.size(), 1));
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (failures[i]) {
      try {
        std::rethrow_exception(failures[i]);
      } catch (const std::exception& e) {
        err << files[i].string() << ": ";
        throw;
      }
    }
  }

  std::string csv =
      "instance,algo,sigma,max_completion,max_flow,opt_completion,opt_flow,"
      "completion_ratio,flow_ratio,completion_factor,flow_factor,"
      "completion_within,flow_within\n";
  bool unknown = false;
  bool violated = false;
  for (const CompareOutcome& o : outcomes) {
    csv += o.rows;
    unknown = unknown || o.unknown;
    violated = violated || o.violated;
  }
  Emit(a.output, csv, out);
  if (violated) return kExitGuaranteeViolated;
  if (unknown) return kExitOracleUnknown;
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Wireless gathering: generators, schedulers, bounds and an "
               "exact oracle",
               "wgp"};
  app.require_subcommand(1);
  GenerateArgs generate;
  RunArgs run;
  ExactArgs exact;
  ValidateArgs validate;
  BoundsArgs bounds;
  CompareArgs compare;
  AddGenerate(app, generate);
  AddRun(app, run);
  AddExact(app, exact);
  AddValidate(app, validate);
  AddBounds(app, bounds);
  AddCompare(app, compare);

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "generate") return RunGenerate(generate, out, err);
    if (name == "run") return RunRun(run, out);
    if (name == "exact") return RunExact(exact, out);
    if (name == "validate") return RunValidate(validate, out);
    if (name == "bounds") return RunBounds(bounds, out);
    if (name == "compare") return RunCompare(compare, out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ScheduleViolation& e) {
    out << "violation (" << ViolationKindName(e.kind()) << "): " << e.what()
        << "\n";
    return kExitScheduleViolation;
  } catch (const MalformedInputError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const InvalidInstanceError& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const HorizonExceededError& e) {
    err << "horizon exceeded: " << e.what() << "\n";
    return kExitHorizonExceeded;
  } catch (const InvalidArgumentError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitInvalidArgument;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  }
}

}  // namespace wgp::cli
