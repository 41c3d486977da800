#pragma once

#include <cstdint>
#include <vector>

#include "prv/acceptance.hpp"
#include "prv/arena.hpp"
#include "prv/lattice.hpp"
#include "prv/verifier.hpp"

namespace prv {

/// Brute-force reference semantics for small instances. Exceeding the
/// vertex cap is a hard error, never a silent truncation.
inline constexpr std::uint32_t kOracleDefaultCap = 16;

/// Every nonempty reachable vertex set that is the inf-set of some play:
/// the induced subgraph is strongly connected and contains an edge
/// (singletons need a self-loop). Ordered by subset rank over reachable
/// vertices.
std::vector<std::vector<std::uint32_t>> enumerate_inf_sets(
    const GameArena& arena, std::uint32_t cap = kOracleDefaultCap);

/// All realizable extended payoffs, sorted.
std::vector<ExtendedPayoff> oracle_realizable(const GameArena& arena,
                                              std::uint32_t cap = kOracleDefaultCap);

/// PRV decision by enumeration: negative iff a lost play realizes a
/// payoff that is maximal among all realizable payoffs.
VerificationResult oracle_verify(const GameArena& arena,
                                 std::uint32_t cap = kOracleDefaultCap);

/// Whether some inf-set satisfies f; referee for the emptiness engine.
bool oracle_check_formula(const GameArena& arena, const MarkTable& marks,
                          const AcceptanceFormula& f,
                          std::uint32_t cap = kOracleDefaultCap);

}  // namespace prv
