#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#include "prv/acceptance.hpp"
#include "prv/arena.hpp"
#include "prv/emptiness.hpp"
#include "prv/lattice.hpp"

namespace prv {

/// Payoff realizability queries over a fixed single-player arena. All
/// queries are pure and may run concurrently; the emptiness-call counter
/// is the only shared state.
///
/// Dominance-shaped queries (geq, and extended geq) compile to Streett
/// pairs and use the refinement fast path; equality and antichain queries
/// go through the generic Inf/Fin engine.
class RealizabilityQueries {
 public:
  explicit RealizabilityQueries(const GameArena& arena);

  /// Lasso with payoff exactly p, if one exists.
  std::optional<Lasso> payoff_eq(const Payoff& p) const;

  /// Lasso with payoff dominating p, if one exists.
  std::optional<Lasso> payoff_geq(const Payoff& p) const;

  /// Lasso with the given won-bit and payoff constraint.
  std::optional<Lasso> extended(bool won, const Payoff& p, PayoffMode mode) const;

  /// Whether no realizable payoff strictly dominates p. Callers must pass
  /// a realizable payoff; this is asserted in debug builds only.
  bool pareto_optimal(const Payoff& p) const;

  /// Lasso lost by the system whose payoff is not strictly below any
  /// element of a, if one exists.
  std::optional<Lasso> lost_not_below(const Antichain& a) const;

  const GameArena& arena() const { return arena_; }
  const MarkTable& marks() const { return marks_; }
  std::uint64_t emptiness_calls() const { return calls_.load(); }

 private:
  const GameArena& arena_;
  MarkTable marks_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

}  // namespace prv
