#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semitsp/bench.hpp"
#include "semitsp/completion.hpp"
#include "semitsp/generators.hpp"
#include "semitsp/instance_io.hpp"
#include "semitsp/solve.hpp"
#include "semitsp/tolerance.hpp"

namespace semitsp::cli {

namespace {

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Edge-list instances are analysed and solved on their completion.
CompleteWeightedGraph as_complete(const InstanceFile& inst, std::ostream& out, bool quiet) {
  if (inst.is_complete()) return std::get<CompleteWeightedGraph>(inst.graph);
  if (!quiet) out << "note=edge list completed with filler edges\n";
  return complete_graph(std::get<WeightedGraph>(inst.graph)).complete;
}

/// "3,5,8-10" -> {3,5,8,9,10}.
template <typename Int>
std::vector<Int> parse_list(const std::string& spec) {
  std::vector<Int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-', 1);
    std::size_t used = 0;
    if (dash == std::string::npos) {
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw CLI::ValidationError("list", "bad entry '" + item + "'");
      out.push_back(static_cast<Int>(v));
    } else {
      const long long lo = std::stoll(item.substr(0, dash));
      const long long hi = std::stoll(item.substr(dash + 1));
      if (hi < lo) throw CLI::ValidationError("list", "empty range '" + item + "'");
      for (long long v = lo; v <= hi; ++v) out.push_back(static_cast<Int>(v));
    }
  }
  if (out.empty()) throw CLI::ValidationError("list", "empty list");
  return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_text_file(path, text);
}

int cmd_analyze(const std::string& file, bool as_json, std::ostream& out) {
  const InstanceFile inst = load_instance(file);
  const CompleteWeightedGraph g = as_complete(inst, out, as_json);
  const RelaxationProfile p = classify(g);
  const int n = g.size();
  const bool suzuki_ok = n < 2 || within_bound(p.gamma, suzuki_bound(p.beta, n));
  const auto bounds = compare_bounds(p.beta, p.gamma);

  if (as_json) {
    nlohmann::ordered_json j;
    j["name"] = inst.name;
    j["n"] = n;
    j["beta"] = p.beta;
    j["gamma"] = p.gamma;
    j["beta_witness"] = p.beta_witness ? nlohmann::ordered_json(*p.beta_witness) : nullptr;
    j["gamma_witness"] = p.gamma_witness ? nlohmann::ordered_json(std::vector{p.gamma_witness->first,
                                                                               p.gamma_witness->second})
                                         : nullptr;
    j["classification"] = metric_class_name(p.kind);
    j["suzuki_bound"] = n >= 2 ? nlohmann::ordered_json(suzuki_bound(p.beta, n)) : nullptr;
    j["suzuki_ok"] = suzuki_ok;
    auto& list = j["bounds"] = nlohmann::ordered_json::array();
    for (const auto& b : bounds) list.push_back({{"method", bound_method_name(b.method)}, {"value", b.value}});
    out << j.dump(2) << "\n";
  } else {
    out.precision(12);
    out << "beta=" << p.beta << " gamma=" << p.gamma << "\n";
    if (p.beta_witness) {
      const auto& t = *p.beta_witness;
      out << "beta_witness=(" << t[0] << "," << t[1] << "," << t[2] << ")\n";
    }
    if (p.gamma_witness) out << "gamma_witness=(" << p.gamma_witness->first << "," << p.gamma_witness->second << ")\n";
    out << "classification=" << metric_class_name(p.kind) << "\n";
    if (n >= 2) {
      out << "suzuki_bound=" << suzuki_bound(p.beta, n) << " suzuki_ok=" << (suzuki_ok ? "true" : "false") << "\n";
    }
    out << "bounds=";
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      out << (k ? " " : "") << bound_method_name(bounds[k].method) << ":" << bounds[k].value;
    }
    out << "\n";
  }
  if (!suzuki_ok) throw VerificationFailed("gamma exceeds the Suzuki bound");
  return kOk;
}

int cmd_complete(const std::string& file, const std::string& output, std::ostream& out) {
  const InstanceFile inst = load_instance(file);
  if (inst.is_complete()) {
    emit(serialize_json(std::get<CompleteWeightedGraph>(inst.graph), inst.name), output, out);
    return kOk;
  }
  const CompletionResult result = complete_graph(std::get<WeightedGraph>(inst.graph));
  emit(serialize_json(result.complete, inst.name), output, out);
  return kOk;
}

struct SolveArgs {
  std::string file;
  std::string method = "mst2";
  int root = 0;
  std::string child_order = "asc";
  bool verify = false;
  bool json = false;
  int oracle_limit = kHeldKarpLimit;
  int matching_limit = kDefaultMatchingLimit;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const InstanceFile inst = load_instance(a.file);
  const CompleteWeightedGraph g = as_complete(inst, out, a.json);
  SolveOptions options;
  options.method = *parse_method(a.method);
  options.root = a.root;
  options.child_order = a.child_order == "desc" ? ChildOrder::descending : ChildOrder::ascending;
  options.oracle_limit = a.oracle_limit;
  options.matching_limit = a.matching_limit;
  SolveReport report = solve(g, options);

  std::optional<Verification> verification;
  if (a.verify && g.size() <= a.oracle_limit) verification = verify_with_oracle(g, report, a.oracle_limit);

  if (a.json) {
    out << report_to_json(report) << "\n";
  } else {
    out << report_to_text(report);
    if (a.verify) {
      if (!verification) out << "verify=skipped (n > oracle limit " << a.oracle_limit << "; oracle-free checks passed)\n";
      else out << "verify=" << (verification->ok() ? "passed" : "FAILED") << "\n";
    }
  }
  if (verification && !verification->ok()) {
    std::string all;
    for (const auto& f : verification->failures) all += (all.empty() ? "" : "; ") + f;
    throw VerificationFailed(all);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relaxation constants and approximate TSP tours on semimetric graphs", "semitsp"};
  app.require_subcommand(1);

  std::string analyze_file;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Compute beta, gamma, witnesses and bound comparison");
  analyze->add_option("file", analyze_file, "Instance file (JSON or TSPLIB)")->required();
  analyze->add_flag("--json", analyze_json, "Emit JSON");

  std::string complete_file, complete_out;
  auto* complete = app.add_subcommand("complete", "Write the completion of an edge-list instance");
  complete->add_option("file", complete_file, "Instance file")->required();
  complete->add_option("-o,--output", complete_out, "Output file (default stdout)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print the report");
  solve_cmd->add_option("file", solve_args.file, "Instance file")->required();
  solve_cmd->add_option("--method", solve_args.method, "mst2 | christofides | exact")
      ->check(CLI::IsMember({"mst2", "christofides", "exact"}));
  solve_cmd->add_option("--root", solve_args.root, "DFS root for mst2")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--child-order", solve_args.child_order, "DFS child order for mst2: asc | desc")
      ->check(CLI::IsMember({"asc", "desc"}));
  solve_cmd->add_flag("--verify", solve_args.verify, "Check the guarantee against the exact optimum");
  solve_cmd->add_option("--oracle-cap", solve_args.oracle_limit, "Largest n for the exact solver")
      ->check(CLI::Range(3, 24));
  solve_cmd->add_option("--matching-cap", solve_args.matching_limit, "Largest odd-vertex set for exact matching")
      ->check(CLI::Range(2, 1 << 16));
  solve_cmd->add_flag("--json", solve_args.json, "Emit JSON");

  std::string gen_kind, gen_out;
  int gen_n = 10;
  double gen_gamma = 2.0, gen_low = 1.0, gen_high = 10.0;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("kind", gen_kind, "example1 | star | random")
      ->required()
      ->check(CLI::IsMember({"example1", "star", "random"}));
  gen->add_option("--n", gen_n, "Vertex count (star, random)");
  gen->add_option("--gamma", gen_gamma, "Target gamma (star)");
  gen->add_option("--seed", gen_seed, "Seed (random)");
  gen->add_option("--low", gen_low, "Lowest weight (random)");
  gen->add_option("--high", gen_high, "Highest weight (random)");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string bench_sizes, bench_seeds, bench_methods = "mst2,christofides", bench_out;
  BenchConfig bench_config;
  auto* bench = app.add_subcommand("bench", "Sweep random instances and write a CSV report");
  bench->add_option("--sizes", bench_sizes, "Vertex counts, e.g. 4-12,20")->required();
  bench->add_option("--seeds", bench_seeds, "Seeds, e.g. 0-99")->required();
  bench->add_option("--low", bench_config.low, "Lowest weight");
  bench->add_option("--high", bench_config.high, "Highest weight");
  bench->add_option("--methods", bench_methods, "Comma-separated methods");
  bench->add_option("--oracle-cap", bench_config.oracle_limit, "Largest n solved exactly")->check(CLI::Range(3, 24));
  bench->add_option("--matching-cap", bench_config.matching_limit, "Largest odd-vertex set for exact matching")
      ->check(CLI::Range(2, 1 << 16));
  bench->add_option("-o,--output", bench_out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_file, analyze_json, out);
    if (*complete) return cmd_complete(complete_file, complete_out, out);
    if (*solve_cmd) return cmd_solve(solve_args, out);
    if (*gen) {
      CompleteWeightedGraph g = gen_kind == "example1" ? gen_example1()
                                : gen_kind == "star"   ? gen_star_family(gen_n, gen_gamma)
                                                       : gen_random(gen_n, gen_seed, gen_low, gen_high);
      emit(serialize_json(g, gen_kind), gen_out, out);
      return kOk;
    }
    if (*bench) {
      try {
        bench_config.sizes = parse_list<int>(bench_sizes);
        bench_config.seeds = parse_list<std::uint64_t>(bench_seeds);
        bench_config.methods.clear();
        std::stringstream ss(bench_methods);
        std::string m;
        while (std::getline(ss, m, ',')) {
          auto parsed = parse_method(m);
          if (!parsed) throw CLI::ValidationError("--methods", "unknown method '" + m + "'");
          bench_config.methods.push_back(*parsed);
        }
      } catch (const std::exception& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
      }
      emit(bench_csv(run_bench(bench_config)), bench_out, out);
      return kOk;
    }
  } catch (const VerificationFailed& e) {
    err << "VerificationFailure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    switch (e.category()) {
      case ErrorCategory::validation:
        err << "ValidationError: " << e.what() << "\n";
        return kInvalidInput;
      case ErrorCategory::verification:
        err << "VerificationFailure: " << e.what() << "\n";
        return kVerificationFailure;
      case ErrorCategory::solver:
        err << "SolverError: " << e.what() << "\n";
        return kSolverError;
    }
  } catch (const std::exception& e) {
    err << "SolverError: " << e.what() << "\n";
    return kSolverError;
  }
  return kUsage;
}

}  // namespace semitsp::cli
