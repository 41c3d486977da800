#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prv/arena.hpp"
#include "prv/lattice.hpp"
#include "prv/realizability.hpp"

namespace prv {

struct VerifyStats {
  std::uint64_t iterations = 0;       // outer-loop rounds / payoffs examined
  std::uint64_t emptiness_calls = 0;
  std::size_t peak_antichain = 0;
  double wall_seconds = 0.0;
  std::vector<std::size_t> antichain_sizes;  // |A| after each iteration
  std::vector<double> call_seconds;          // counterexample query time per iteration
  std::vector<Antichain> antichains;         // A after each growth step
};

struct VerificationResult {
  bool positive = false;
  std::optional<Lasso> counterexample;  // present iff negative; lost and Pareto-optimal
  std::optional<Antichain> certificate;  // present iff positive
  VerifyStats stats;
};

/// The antichain of Pareto-optimal payoffs, by checking every payoff in
/// the lattice for realizability.
Antichain compute_pareto_set(const GameArena& arena);

/// Two-step decision: compute the Pareto set, then look for a lost play
/// realizing one of its payoffs.
VerificationResult naive_verify(const GameArena& arena);

/// Level-by-level descent from the top payoff maintaining the known part
/// of the Pareto set, stopping early on a lost Pareto-optimal play.
VerificationResult antichain_verify(const GameArena& arena);

/// Counterexample-guided search growing an under-approximation of the
/// Pareto set until it certifies the instance or a counterexample remains.
VerificationResult counterexample_verify(const GameArena& arena);

/// Whether every element of a is realizable and no lost play escapes its
/// strict downward closure.
bool check_certificate(const GameArena& arena, const Antichain& a);

}  // namespace prv
