#include "prv/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "prv/realizability.hpp"

namespace prv {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

template <typename Fn>
double timed_mean(std::uint32_t repetitions, Fn&& run) {
  double total = 0.0;
  for (std::uint32_t i = 0; i < repetitions; ++i) {
    auto start = std::chrono::steady_clock::now();
    run();
    total += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return total / repetitions;
}

std::string format_value(double value) {
  if (std::isnan(value)) return "nan";
  std::ostringstream out;
  out.precision(9);
  out << value;
  return out.str();
}

}  // namespace

const char* const kBenchCsvHeader =
    "instance,family,nbr_vertices,nbr_objectives,seed,result,AO_time,CE_time,"
    "naive_time,pareto_size,ratio_lost_payoffs,A_size_alg1,A_size_alg2";

const char* const kIterationCsvHeader = "iteration,A_size,call_time";

BenchRow run_bench_instance(const BenchInstance& instance, const BenchOptions& options,
                            std::vector<IterationRow>* iterations) {
  const GameArena& arena = instance.arena;
  BenchRow row;
  row.instance = instance.name;
  row.family = instance.family;
  row.nbr_vertices = arena.vertex_count();
  row.nbr_objectives = arena.objective_count();
  row.seed = instance.seed;

  VerificationResult ao, ce;
  row.ao_time = timed_mean(options.repetitions, [&] { ao = antichain_verify(arena); });
  row.ce_time = timed_mean(options.repetitions, [&] { ce = counterexample_verify(arena); });
  row.naive_time = kMissing;
  bool agree = ao.positive == ce.positive;
  if (options.run_naive) {
    VerificationResult naive;
    row.naive_time = timed_mean(options.repetitions, [&] { naive = naive_verify(arena); });
    agree = agree && naive.positive == ao.positive;
  }
  if (!agree)
    throw std::logic_error("bench: algorithms disagree on instance " + instance.name);

  row.result = ao.positive ? "positive" : "negative";
  row.a_size_alg1 =
      ao.stats.antichain_sizes.empty() ? 0.0 : static_cast<double>(ao.stats.antichain_sizes.back());
  row.a_size_alg2 =
      ce.stats.antichain_sizes.empty() ? 0.0 : static_cast<double>(ce.stats.antichain_sizes.back());

  row.pareto_size = kMissing;
  row.ratio_lost_payoffs = kMissing;
  if (ao.positive && ao.certificate)
    row.pareto_size = static_cast<double>(ao.certificate->size());
  if (options.with_stats) {
    RealizabilityQueries queries(arena);
    const std::uint32_t t = arena.objective_count();
    std::vector<Payoff> realizable;
    std::uint64_t lost = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits) {
      Payoff p(t, bits);
      if (!queries.payoff_eq(p)) continue;
      realizable.push_back(p);
      if (queries.extended(false, p, PayoffMode::eq)) ++lost;
    }
    row.pareto_size = static_cast<double>(Antichain::ceil(realizable).size());
    row.ratio_lost_payoffs =
        realizable.empty() ? kMissing
                           : static_cast<double>(lost) / static_cast<double>(realizable.size());
  }

  if (iterations) {
    for (std::size_t i = 0; i < ce.stats.call_seconds.size(); ++i) {
      IterationRow it;
      it.iteration = i;
      it.a_size = i < ce.stats.antichain_sizes.size() ? ce.stats.antichain_sizes[i]
                                                      : (ce.stats.antichain_sizes.empty()
                                                             ? 0
                                                             : ce.stats.antichain_sizes.back());
      it.call_time = ce.stats.call_seconds[i];
      iterations->push_back(it);
    }
  }
  return row;
}

void write_csv_row(std::ostream& out, const BenchRow& row) {
  out << row.instance << ',' << row.family << ',' << row.nbr_vertices << ','
      << row.nbr_objectives << ',' << row.seed << ',' << row.result << ','
      << format_value(row.ao_time) << ',' << format_value(row.ce_time) << ','
      << format_value(row.naive_time) << ',' << format_value(row.pareto_size) << ','
      << format_value(row.ratio_lost_payoffs) << ',' << format_value(row.a_size_alg1)
      << ',' << format_value(row.a_size_alg2) << '\n';
}

void write_iteration_rows(std::ostream& out, const std::vector<IterationRow>& rows) {
  for (const IterationRow& row : rows)
    out << row.iteration << ',' << row.a_size << ',' << format_value(row.call_time) << '\n';
}

}  // namespace prv
