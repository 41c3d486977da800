#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prv/acceptance.hpp"
#include "prv/arena.hpp"
#include "prv/lattice.hpp"

namespace prv {

/// Strongly connected components of the subgraph induced by `restrict_set`,
/// as a partition including trivial components. Components are listed by
/// smallest vertex id and sorted internally; the decomposition is
/// deterministic.
std::vector<std::vector<std::uint32_t>> sccs(const GameArena& arena,
                                             std::span<const std::uint32_t> restrict_set);

struct EmptinessStats {
  std::uint64_t scc_solves = 0;  // calls into the per-component solver
  std::uint64_t branchings = 0;  // Fin-atom case splits
};

/// Decides whether the single-player arena has a play whose inf-set
/// satisfies f, returning a lasso witness. Recursive SCC refinement over
/// the positive Inf/Fin formula: Fin-free residuals are decided directly
/// on the component; otherwise the lowest Fin mark is branched on, first
/// removing its carriers, then assuming the mark stays. Deterministic.
/// Throws std::invalid_argument on a two-player arena.
std::optional<Lasso> check(const GameArena& arena, const MarkTable& marks,
                           const AcceptanceFormula& f, EmptinessStats* stats = nullptr);

/// Streett emptiness by iterated SCC refinement deleting the F-vertices of
/// violated pairs. Same contract as check for conjunctions of parities.
std::optional<Lasso> streett_check(const GameArena& arena, const StreettPairs& pairs);

/// Extended payoff of a hypothetical inf-set, by the min-even rule per
/// objective.
ExtendedPayoff evaluate_inf_set(const GameArena& arena,
                                std::span<const std::uint32_t> vertices);

struct PlayReport {
  ExtendedPayoff extended;
  std::string text;  // "0 3 (4)^ω : 1,(1,0,1,1)"
};

/// Extended payoff and printable trace of a lasso witness. Throws on an
/// invalid lasso.
PlayReport witness_to_play_report(const GameArena& arena, const Lasso& w);

}  // namespace prv
