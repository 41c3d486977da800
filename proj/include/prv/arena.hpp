#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace prv {

/// Game arena: finite directed graph with an owner partition, an initial
/// vertex and t+1 priority functions (index 0 is the system objective,
/// indices 1..t belong to the environment). Immutable after construction;
/// safe to share across concurrent readers.
struct GameArena {
  std::vector<std::uint8_t> owner;                     // 0 or 1 per vertex
  std::vector<std::vector<std::uint32_t>> successors;  // ordered, nonempty
  std::uint32_t initial = 0;
  std::vector<std::vector<std::uint32_t>> priorities;  // [vertex][objective]
  std::vector<std::uint32_t> max_priority;             // size t+1, even entries

  std::uint32_t vertex_count() const {
    return static_cast<std::uint32_t>(successors.size());
  }
  std::uint32_t objective_count() const {  // t
    return max_priority.empty() ? 0
                                : static_cast<std::uint32_t>(max_priority.size()) - 1;
  }
  bool has_edge(std::uint32_t from, std::uint32_t to) const;

  /// Rounds odd declared maxima up to the next even number.
  void pad_max_priorities();
};

bool single_player(const GameArena& arena);

/// Empty result iff all structural invariants hold; each violation names
/// the vertex or edge and the broken rule.
std::vector<std::string> validate(const GameArena& arena);

/// Vertices reachable from the initial vertex.
std::vector<bool> reachable(const GameArena& arena);

/// Finite-memory strategy for Player 0 encoded as a Moore machine. The
/// state is updated on every visited vertex, including the initial one;
/// the choice for a Player-0 vertex reads the state reached after
/// consuming that vertex.
struct MooreMachine {
  std::uint32_t state_count = 1;
  std::uint32_t initial_state = 0;
  // (state, vertex) -> state
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> update;
  // (state, vertex) -> chosen successor, for Player-0 vertices
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> choice;
};

/// Product of an arena with a committed strategy: the reachable part of
/// the (vertex, state) graph, as a single-player arena whose infinite
/// paths are exactly the plays of `arena` consistent with the strategy.
/// When given, pair_map receives the (vertex, state) pair behind each
/// product vertex. Throws std::runtime_error when the machine is
/// incomplete on a reachable pair or picks a non-successor.
GameArena product(const GameArena& arena, const MooreMachine& machine,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>>* pair_map = nullptr);

/// Ultimately periodic play: finite prefix then a cycle repeated forever.
/// The prefix starts at the initial vertex; when it is empty the cycle
/// does. The vertices visited infinitely often are exactly the cycle set.
struct Lasso {
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint32_t> cycle;
};

std::vector<std::string> validate_lasso(const GameArena& arena, const Lasso& w);

/// Priorities of `objective` occurring infinitely often in the lasso's
/// play, i.e. over its cycle vertices. Throws on an invalid lasso.
std::set<std::uint32_t> lasso_inf_priorities(const GameArena& arena, const Lasso& w,
                                             std::uint32_t objective);

std::string lasso_to_string(const Lasso& w);  // "0 3 (4 5)^ω"

}  // namespace prv
