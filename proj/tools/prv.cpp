// Command-line front end: verify SPGAME files, generate instance families,
// and run the benchmark harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prv/bench.hpp"
#include "prv/emptiness.hpp"
#include "prv/generators.hpp"
#include "prv/io.hpp"
#include "prv/verifier.hpp"

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

prv::GameArena load_arena(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  prv::GameArena arena = prv::parse_arena(in);
  auto violations = prv::validate(arena);
  if (!violations.empty())
    throw std::runtime_error(path + ": " + violations.front());
  return arena;
}

prv::MooreMachine load_moore(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return prv::parse_moore(in);
}

struct VerifyArgs {
  std::string path;
  std::string algorithm = "antichain";
  std::string strategy_path;
  bool emit_witness = false;
  bool emit_certificate = false;
};

int run_verify(const VerifyArgs& args) {
  prv::GameArena arena = load_arena(args.path);
  if (!prv::single_player(arena)) {
    if (args.strategy_path.empty())
      throw std::runtime_error(args.path +
                               ": two-player arena, commit a strategy with --strategy");
    arena = prv::product(arena, load_moore(args.strategy_path));
  } else if (!args.strategy_path.empty()) {
    arena = prv::product(arena, load_moore(args.strategy_path));
  }

  prv::VerificationResult result;
  if (args.algorithm == "naive")
    result = prv::naive_verify(arena);
  else if (args.algorithm == "antichain")
    result = prv::antichain_verify(arena);
  else
    result = prv::counterexample_verify(arena);

  std::cout << "verdict: " << (result.positive ? "positive" : "negative") << '\n';
  if (result.positive && args.emit_certificate && result.certificate) {
    const char* label = args.algorithm == "counterexample" ? "certificate" : "pareto set";
    std::cout << label << ": " << result.certificate->to_string() << '\n';
  }
  if (!result.positive && result.counterexample) {
    prv::PlayReport report = prv::witness_to_play_report(arena, *result.counterexample);
    std::cout << "counterexample payoff: " << report.extended.to_string() << '\n';
    if (args.emit_witness) std::cout << "counterexample: " << report.text << '\n';
  }
  std::cout << "stats: emptiness_calls=" << result.stats.emptiness_calls
            << " iterations=" << result.stats.iterations
            << " peak_antichain=" << result.stats.peak_antichain
            << " wall_seconds=" << result.stats.wall_seconds << '\n';
  if (!result.stats.antichain_sizes.empty()) {
    std::cout << "antichain sizes:";
    for (std::size_t size : result.stats.antichain_sizes) std::cout << ' ' << size;
    std::cout << '\n';
  }
  return result.positive ? kExitPositive : kExitNegative;
}

struct GenerateArgs {
  std::uint32_t copies = 1;
  bool per_copy_objectives = false;
  bool negative = false;
  std::uint32_t vertices = 500;
  std::uint32_t objectives = 6;
  std::uint32_t max_priority = 4;
  std::uint64_t seed = 0;
  std::uint32_t out_degree_min = 1;
  std::uint32_t out_degree_max = 4;
  std::string dimacs_path;
};

int run_generate(const std::string& kind, const GenerateArgs& args) {
  prv::GameArena arena;
  if (kind == "intersection") {
    arena = prv::gen_intersection(args.copies, args.per_copy_objectives, args.negative);
  } else if (kind == "random") {
    arena = prv::gen_random(args.vertices, args.objectives, args.max_priority, args.seed,
                            {args.out_degree_min, args.out_degree_max});
  } else {
    std::ifstream in(args.dimacs_path);
    if (!in) throw std::runtime_error("cannot open '" + args.dimacs_path + "'");
    arena = prv::gen_from_cnf(prv::parse_dimacs(in));
  }
  std::cout << prv::write_arena(arena);
  return kExitPositive;
}

struct BenchArgs {
  std::string family = "intersection";
  std::vector<std::uint32_t> copies{1};
  bool per_copy_objectives = false;
  bool negative = false;
  std::uint32_t vertices = 500;
  std::vector<std::uint32_t> objectives{6};
  std::uint32_t max_priority = 4;
  std::uint32_t seeds = 1;
  std::uint64_t seed_base = 0;
  std::string output_path;
  std::string iterations_path;
  prv::BenchOptions options;
};

int run_bench(const BenchArgs& args) {
  std::vector<prv::BenchInstance> instances;
  if (args.family == "intersection") {
    for (std::uint32_t k : args.copies) {
      prv::BenchInstance instance;
      instance.family = args.per_copy_objectives ? "intersection-objectives" : "intersection";
      instance.name = instance.family + "-k" + std::to_string(k) +
                      (args.negative ? "-neg" : "-pos");
      instance.arena = prv::gen_intersection(k, args.per_copy_objectives, args.negative);
      instances.push_back(std::move(instance));
    }
  } else {
    for (std::uint32_t t : args.objectives)
      for (std::uint32_t s = 0; s < args.seeds; ++s) {
        prv::BenchInstance instance;
        instance.family = "random";
        instance.seed = args.seed_base + s;
        instance.name = "random-n" + std::to_string(args.vertices) + "-t" +
                        std::to_string(t) + "-s" + std::to_string(instance.seed);
        instance.arena = prv::gen_random(args.vertices, t, args.max_priority, instance.seed);
        instances.push_back(std::move(instance));
      }
  }

  std::ofstream out(args.output_path);
  if (!out) throw std::runtime_error("cannot write '" + args.output_path + "'");
  out << prv::kBenchCsvHeader << '\n';

  std::optional<std::ofstream> iteration_out;
  if (!args.iterations_path.empty()) {
    iteration_out.emplace(args.iterations_path);
    if (!*iteration_out)
      throw std::runtime_error("cannot write '" + args.iterations_path + "'");
    *iteration_out << prv::kIterationCsvHeader << '\n';
  }

  for (const prv::BenchInstance& instance : instances) {
    std::vector<prv::IterationRow> iterations;
    prv::BenchRow row = prv::run_bench_instance(
        instance, args.options, iteration_out ? &iterations : nullptr);
    prv::write_csv_row(out, row);
    if (iteration_out) prv::write_iteration_rows(*iteration_out, iterations);
  }
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto-rational verification of single-player parity games"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "decide an SPGAME instance");
  verify->add_option("file", verify_args.path, "SPGAME input file")->required();
  verify->add_option("--algorithm", verify_args.algorithm, "decision procedure")
      ->check(CLI::IsMember({"naive", "antichain", "counterexample"}))
      ->capture_default_str();
  verify->add_option("--strategy", verify_args.strategy_path,
                     "MOORE machine; committed before verification");
  verify->add_flag("--emit-witness", verify_args.emit_witness,
                   "print the counterexample lasso");
  verify->add_flag("--emit-certificate", verify_args.emit_certificate,
                   "print the Pareto set or certificate antichain");

  GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand("generate", "emit an SPGAME instance");
  generate->require_subcommand(1);
  CLI::App* gen_inter = generate->add_subcommand("intersection", "traffic example family");
  gen_inter->add_option("--copies", generate_args.copies, "number of copies")
      ->capture_default_str();
  gen_inter->add_flag("--per-copy-objectives", generate_args.per_copy_objectives,
                      "duplicate the crossing-order objectives per copy");
  gen_inter->add_flag("--negative", generate_args.negative,
                      "make one Pareto-optimal play lost");
  CLI::App* gen_random = generate->add_subcommand("random", "random instance");
  gen_random->add_option("--vertices", generate_args.vertices)->capture_default_str();
  gen_random->add_option("--objectives", generate_args.objectives)->capture_default_str();
  gen_random->add_option("--max-priority", generate_args.max_priority)->capture_default_str();
  gen_random->add_option("--seed", generate_args.seed)->capture_default_str();
  gen_random->add_option("--out-degree-min", generate_args.out_degree_min)
      ->capture_default_str();
  gen_random->add_option("--out-degree-max", generate_args.out_degree_max)
      ->capture_default_str();
  CLI::App* gen_cnf = generate->add_subcommand("cnf", "co3SAT reduction arena");
  gen_cnf->add_option("--dimacs", generate_args.dimacs_path, "DIMACS CNF input")
      ->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "measure the algorithms, write CSV");
  bench->add_option("--family", bench_args.family)
      ->check(CLI::IsMember({"intersection", "random"}))
      ->capture_default_str();
  bench->add_option("--copies", bench_args.copies, "copy counts (intersection)")
      ->delimiter(',');
  bench->add_flag("--per-copy-objectives", bench_args.per_copy_objectives);
  bench->add_flag("--negative", bench_args.negative);
  bench->add_option("--vertices", bench_args.vertices)->capture_default_str();
  bench->add_option("--objectives", bench_args.objectives, "objective counts (random)")
      ->delimiter(',');
  bench->add_option("--max-priority", bench_args.max_priority)->capture_default_str();
  bench->add_option("--seeds", bench_args.seeds, "number of seeds per configuration")
      ->capture_default_str();
  bench->add_option("--seed-base", bench_args.seed_base)->capture_default_str();
  bench->add_option("--output", bench_args.output_path, "CSV output path")->required();
  bench->add_option("--iterations-output", bench_args.iterations_path,
                    "per-iteration CSV for the counterexample algorithm");
  bench->add_option("--repetitions", bench_args.options.repetitions)
      ->capture_default_str();
  bench->add_flag("--with-stats", bench_args.options.with_stats,
                  "enumerate realizable payoffs for the ratio columns");
  bench->add_flag("--skip-naive",
                  [&](std::size_t) { bench_args.options.run_naive = false; },
                  "skip the naive algorithm (exponential in t)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*verify) return run_verify(verify_args);
    if (*generate) {
      const std::string kind = generate->get_subcommands().front()->get_name();
      return run_generate(kind, generate_args);
    }
    return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
