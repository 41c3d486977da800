#include "prv/verifier.hpp"

#include <chrono>
#include <deque>
#include <unordered_set>

namespace prv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Payoff> all_payoffs(std::uint32_t t) {
  std::vector<Payoff> out;
  out.reserve(std::size_t{1} << t);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits)
    out.emplace_back(t, bits);
  return out;
}

// Lifts a lost witness to one whose payoff is Pareto-optimal. Assumes no
// won play dominates the witness payoff (established by the caller), so
// climbing through lost plays reaches a maximal realizable payoff.
Lasso lift_lost_witness(const RealizabilityQueries& queries, Lasso witness) {
  const GameArena& arena = queries.arena();
  for (;;) {
    Payoff current = evaluate_inf_set(arena, witness.cycle).payoff;
    bool climbed = false;
    for (const Payoff& q : one_bit_up(current)) {
      if (auto higher = queries.extended(false, q, PayoffMode::geq)) {
        witness = std::move(*higher);
        climbed = true;
        break;
      }
    }
    if (!climbed) return witness;
  }
}

}  // namespace

Antichain compute_pareto_set(const GameArena& arena) {
  RealizabilityQueries queries(arena);
  std::vector<Payoff> realizable;
  for (const Payoff& p : all_payoffs(arena.objective_count()))
    if (queries.payoff_eq(p)) realizable.push_back(p);
  return Antichain::ceil(realizable);
}

VerificationResult naive_verify(const GameArena& arena) {
  auto start = Clock::now();
  RealizabilityQueries queries(arena);
  VerificationResult result;

  std::vector<Payoff> realizable;
  for (const Payoff& p : all_payoffs(arena.objective_count())) {
    ++result.stats.iterations;
    if (queries.payoff_eq(p)) realizable.push_back(p);
  }
  Antichain pareto = Antichain::ceil(realizable);
  result.stats.peak_antichain = pareto.size();

  result.positive = true;
  for (const Payoff& p : pareto.elements()) {
    if (auto lost = queries.extended(false, p, PayoffMode::eq)) {
      result.positive = false;
      result.counterexample = std::move(*lost);
      break;
    }
  }
  if (result.positive) result.certificate = std::move(pareto);
  result.stats.emptiness_calls = queries.emptiness_calls();
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

VerificationResult antichain_verify(const GameArena& arena) {
  auto start = Clock::now();
  RealizabilityQueries queries(arena);
  VerificationResult result;
  const std::uint32_t t = arena.objective_count();

  Antichain known;
  std::deque<Payoff> queue{Payoff::top(t)};
  std::unordered_set<std::uint64_t> enqueued{Payoff::top(t).bits()};

  while (!queue.empty()) {
    Payoff p = queue.front();
    queue.pop_front();
    ++result.stats.iterations;
    if (known.in_strict_down(p)) {
      result.stats.antichain_sizes.push_back(known.size());
      continue;
    }
    // Level order guarantees no strictly larger payoff is realizable at
    // this point, so the cheaper dominance checks are exact here.
    if (queries.payoff_geq(p)) {
      known.insert(p);
      result.stats.peak_antichain = std::max(result.stats.peak_antichain, known.size());
      if (auto lost = queries.extended(false, p, PayoffMode::geq)) {
        result.positive = false;
        result.counterexample = std::move(*lost);
        result.stats.antichain_sizes.push_back(known.size());
        result.stats.emptiness_calls = queries.emptiness_calls();
        result.stats.wall_seconds = seconds_since(start);
        return result;
      }
    } else {
      for (const Payoff& child : one_bit_down(p)) {
        if (known.in_strict_down(child)) continue;
        if (!enqueued.insert(child.bits()).second) continue;
        queue.push_back(child);
      }
    }
    result.stats.antichain_sizes.push_back(known.size());
  }

  result.positive = true;
  result.certificate = std::move(known);
  result.stats.emptiness_calls = queries.emptiness_calls();
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

VerificationResult counterexample_verify(const GameArena& arena) {
  auto start = Clock::now();
  RealizabilityQueries queries(arena);
  VerificationResult result;

  Antichain approximation;
  for (;;) {
    ++result.stats.iterations;
    auto query_start = Clock::now();
    std::optional<Lasso> candidate = queries.lost_not_below(approximation);
    result.stats.call_seconds.push_back(seconds_since(query_start));

    if (!candidate) {
      result.positive = true;
      result.certificate = approximation;
      result.stats.antichain_sizes.push_back(approximation.size());
      break;
    }
    Payoff p = evaluate_inf_set(arena, candidate->cycle).payoff;

    // A won play strictly above p, probed one objective at a time.
    std::optional<Lasso> dominating;
    for (const Payoff& q : one_bit_up(p)) {
      dominating = queries.extended(true, q, PayoffMode::geq);
      if (dominating) break;
    }
    if (!dominating) {
      result.positive = false;
      result.counterexample = lift_lost_witness(queries, std::move(*candidate));
      result.stats.antichain_sizes.push_back(approximation.size());
      break;
    }
    approximation.insert(evaluate_inf_set(arena, dominating->cycle).payoff);
    result.stats.peak_antichain = std::max(result.stats.peak_antichain, approximation.size());
    result.stats.antichain_sizes.push_back(approximation.size());
    result.stats.antichains.push_back(approximation);
  }

  result.stats.emptiness_calls = queries.emptiness_calls();
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

bool check_certificate(const GameArena& arena, const Antichain& a) {
  RealizabilityQueries queries(arena);
  for (const Payoff& p : a.elements())
    if (!queries.payoff_eq(p)) return false;
  return !queries.lost_not_below(a).has_value();
}

}  // namespace prv
