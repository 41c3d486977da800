#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "prv/arena.hpp"
#include "prv/generators.hpp"
#include "prv/lattice.hpp"

namespace prv::testing {

struct VertexSpec {
  std::uint8_t owner;
  std::vector<std::uint32_t> priorities;
  std::vector<std::uint32_t> successors;
};

inline GameArena make_arena(std::vector<std::uint32_t> max_priority,
                            std::vector<VertexSpec> vertices, std::uint32_t initial = 0) {
  GameArena arena;
  arena.max_priority = std::move(max_priority);
  arena.initial = initial;
  for (VertexSpec& v : vertices) {
    arena.owner.push_back(v.owner);
    arena.priorities.push_back(std::move(v.priorities));
    arena.successors.push_back(std::move(v.successors));
  }
  return arena;
}

// Single vertex with a self-loop carrying the given priorities.
inline GameArena self_loop(std::vector<std::uint32_t> priorities,
                           std::vector<std::uint32_t> max_priority) {
  return make_arena(std::move(max_priority), {{1, std::move(priorities), {0}}});
}

inline Payoff pay(std::initializer_list<int> bits) {
  Payoff p = Payoff::bottom(static_cast<std::uint32_t>(bits.size()));
  std::uint32_t i = 0;
  for (int b : bits) p = p.with_bit(i++, b != 0);
  return p;
}

// Random CNF with every variable occurring at least once; deterministic.
// Needs variables <= 3 * clauses so coverage is possible.
inline CnfFormula random_cnf(std::uint32_t variables, std::uint32_t clauses,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CnfFormula formula;
  formula.variable_count = variables;
  formula.clauses.resize(clauses);

  // Deal every variable round-robin, then pad clauses with extra distinct
  // variables up to three literals.
  std::vector<std::vector<std::uint32_t>> members(clauses);
  for (std::uint32_t v = 1; v <= variables; ++v)
    members[(v - 1) % clauses].push_back(v);
  for (std::uint32_t i = 0; i < clauses; ++i) {
    if (members[i].empty())
      members[i].push_back(1 + static_cast<std::uint32_t>(rng() % variables));
    std::uint32_t extras = static_cast<std::uint32_t>(rng() % 3);
    while (members[i].size() < 3 && extras > 0) {
      std::uint32_t v = 1 + static_cast<std::uint32_t>(rng() % variables);
      if (std::find(members[i].begin(), members[i].end(), v) == members[i].end())
        members[i].push_back(v);
      --extras;
    }
    for (std::uint32_t v : members[i])
      formula.clauses[i].literals.push_back(rng() % 2 ? static_cast<std::int32_t>(v)
                                                      : -static_cast<std::int32_t>(v));
  }
  return formula;
}

}  // namespace prv::testing
