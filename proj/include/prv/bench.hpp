#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "prv/arena.hpp"
#include "prv/verifier.hpp"

namespace prv {

struct BenchOptions {
  std::uint32_t repetitions = 1;  // timing runs per algorithm; means are reported
  bool run_naive = true;
  bool with_stats = false;  // enables the Pareto-set and lost-ratio enumeration
};

struct BenchInstance {
  std::string name;
  std::string family;
  std::uint64_t seed = 0;
  GameArena arena;
};

/// One CSV row; unavailable values (skipped naive run, stats without the
/// enumeration flag) are NaN.
struct BenchRow {
  std::string instance;
  std::string family;
  std::uint32_t nbr_vertices = 0;
  std::uint32_t nbr_objectives = 0;
  std::uint64_t seed = 0;
  std::string result;  // "positive" | "negative"
  double ao_time = 0.0;
  double ce_time = 0.0;
  double naive_time = 0.0;
  double pareto_size = 0.0;
  double ratio_lost_payoffs = 0.0;
  double a_size_alg1 = 0.0;
  double a_size_alg2 = 0.0;
};

/// Per-iteration series of the counterexample algorithm (antichain size
/// and counterexample-query time), for the optional second CSV.
struct IterationRow {
  std::uint64_t iteration = 0;
  std::size_t a_size = 0;
  double call_time = 0.0;
};

/// Runs the algorithms on one instance. Wall time per algorithm excludes
/// parsing and generation; with repetitions > 1 the mean is reported.
BenchRow run_bench_instance(const BenchInstance& instance, const BenchOptions& options,
                            std::vector<IterationRow>* iterations = nullptr);

extern const char* const kBenchCsvHeader;
extern const char* const kIterationCsvHeader;

void write_csv_row(std::ostream& out, const BenchRow& row);
void write_iteration_rows(std::ostream& out, const std::vector<IterationRow>& rows);

}  // namespace prv
