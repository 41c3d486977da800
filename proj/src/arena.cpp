#include "prv/arena.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace prv {

namespace {

std::string vertex_str(std::uint32_t v) { return std::to_string(v); }

}  // namespace

bool GameArena::has_edge(std::uint32_t from, std::uint32_t to) const {
  const auto& succ = successors[from];
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

void GameArena::pad_max_priorities() {
  for (auto& d : max_priority)
    if (d % 2 != 0) ++d;
}

bool single_player(const GameArena& arena) {
  return std::all_of(arena.owner.begin(), arena.owner.end(),
                     [](std::uint8_t o) { return o == 1; });
}

std::vector<std::string> validate(const GameArena& arena) {
  std::vector<std::string> violations;
  const std::uint32_t n = arena.vertex_count();

  if (n == 0) violations.push_back("arena has no vertices");
  if (arena.owner.size() != n)
    violations.push_back("owner map covers " + std::to_string(arena.owner.size()) +
                         " of " + std::to_string(n) + " vertices");
  if (arena.priorities.size() != n)
    violations.push_back("priority map covers " + std::to_string(arena.priorities.size()) +
                         " of " + std::to_string(n) + " vertices");
  if (arena.max_priority.empty())
    violations.push_back("no objectives declared");
  if (n > 0 && arena.initial >= n)
    violations.push_back("initial vertex " + vertex_str(arena.initial) + " out of range");

  for (std::size_t i = 0; i < arena.max_priority.size(); ++i)
    if (arena.max_priority[i] % 2 != 0)
      violations.push_back("max priority of objective " + std::to_string(i) +
                           " is odd (" + std::to_string(arena.max_priority[i]) + ")");

  for (std::uint32_t v = 0; v < n; ++v) {
    if (arena.successors[v].empty())
      violations.push_back("vertex " + vertex_str(v) + " has no successor");
    for (std::uint32_t target : arena.successors[v])
      if (target >= n)
        violations.push_back("edge target " + vertex_str(target) + " out of range");
    if (v < arena.owner.size() && arena.owner[v] > 1)
      violations.push_back("vertex " + vertex_str(v) + " has owner " +
                           std::to_string(arena.owner[v]) + ", expected 0 or 1");
    if (v < arena.priorities.size()) {
      const auto& pri = arena.priorities[v];
      if (pri.size() != arena.max_priority.size()) {
        violations.push_back("vertex " + vertex_str(v) + " declares " +
                             std::to_string(pri.size()) + " priorities, expected " +
                             std::to_string(arena.max_priority.size()));
      } else {
        for (std::size_t i = 0; i < pri.size(); ++i)
          if (pri[i] > arena.max_priority[i])
            violations.push_back("vertex " + vertex_str(v) + " has priority " +
                                 std::to_string(pri[i]) + " above maximum " +
                                 std::to_string(arena.max_priority[i]) +
                                 " for objective " + std::to_string(i));
      }
    }
  }
  return violations;
}

std::vector<bool> reachable(const GameArena& arena) {
  std::vector<bool> seen(arena.vertex_count(), false);
  if (arena.initial >= arena.vertex_count()) return seen;
  std::deque<std::uint32_t> queue{arena.initial};
  seen[arena.initial] = true;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : arena.successors[v])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  }
  return seen;
}

GameArena product(const GameArena& arena, const MooreMachine& machine,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>>* pair_map) {
  auto update_of = [&](std::uint32_t state, std::uint32_t vertex) {
    auto it = machine.update.find({state, vertex});
    if (it == machine.update.end())
      throw std::runtime_error("product: machine update missing for state " +
                               std::to_string(state) + " at vertex " +
                               std::to_string(vertex));
    return it->second;
  };

  GameArena out;
  out.max_priority = arena.max_priority;

  // Dense ids for reachable (vertex, state) pairs in BFS discovery order.
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  auto intern = [&](std::uint32_t vertex, std::uint32_t state) {
    std::uint64_t key = (std::uint64_t{vertex} << 32) | state;
    auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(pairs.size()));
    if (inserted) pairs.emplace_back(vertex, state);
    return it->second;
  };

  std::uint32_t start = intern(arena.initial, update_of(machine.initial_state, arena.initial));
  out.initial = start;

  for (std::uint32_t id = 0; id < pairs.size(); ++id) {
    auto [v, m] = pairs[id];
    out.owner.push_back(1);
    out.priorities.push_back(arena.priorities[v]);
    std::vector<std::uint32_t> succ;
    if (arena.owner[v] == 1) {
      for (std::uint32_t w : arena.successors[v])
        succ.push_back(intern(w, update_of(m, w)));
    } else {
      auto it = machine.choice.find({m, v});
      if (it == machine.choice.end())
        throw std::runtime_error("product: strategy incomplete: no choice for state " +
                                 std::to_string(m) + " at vertex " + std::to_string(v));
      std::uint32_t w = it->second;
      if (!arena.has_edge(v, w))
        throw std::runtime_error("product: choice " + std::to_string(w) +
                                 " is not a successor of vertex " + std::to_string(v));
      succ.push_back(intern(w, update_of(m, w)));
    }
    out.successors.push_back(std::move(succ));
  }
  if (pair_map) *pair_map = std::move(pairs);
  return out;
}

std::vector<std::string> validate_lasso(const GameArena& arena, const Lasso& w) {
  std::vector<std::string> violations;
  const std::uint32_t n = arena.vertex_count();

  if (w.cycle.empty()) {
    violations.push_back("lasso cycle is empty");
    return violations;
  }
  for (std::uint32_t v : w.prefix)
    if (v >= n) violations.push_back("prefix vertex " + vertex_str(v) + " out of range");
  for (std::uint32_t v : w.cycle)
    if (v >= n) violations.push_back("cycle vertex " + vertex_str(v) + " out of range");
  if (!violations.empty()) return violations;

  std::uint32_t head = w.prefix.empty() ? w.cycle.front() : w.prefix.front();
  if (head != arena.initial)
    violations.push_back("lasso starts at vertex " + vertex_str(head) +
                         ", expected initial vertex " + vertex_str(arena.initial));

  std::vector<std::uint32_t> path = w.prefix;
  path.insert(path.end(), w.cycle.begin(), w.cycle.end());
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!arena.has_edge(path[i], path[i + 1]))
      violations.push_back("missing edge " + vertex_str(path[i]) + " -> " +
                           vertex_str(path[i + 1]));
  if (!arena.has_edge(w.cycle.back(), w.cycle.front()))
    violations.push_back("missing closing edge " + vertex_str(w.cycle.back()) + " -> " +
                         vertex_str(w.cycle.front()));
  return violations;
}

std::set<std::uint32_t> lasso_inf_priorities(const GameArena& arena, const Lasso& w,
                                             std::uint32_t objective) {
  auto violations = validate_lasso(arena, w);
  if (!violations.empty())
    throw std::invalid_argument("lasso_inf_priorities: " + violations.front());
  if (objective > arena.objective_count())
    throw std::invalid_argument("lasso_inf_priorities: objective out of range");
  std::set<std::uint32_t> out;
  for (std::uint32_t v : w.cycle) out.insert(arena.priorities[v][objective]);
  return out;
}

std::string lasso_to_string(const Lasso& w) {
  std::string out;
  for (std::uint32_t v : w.prefix) {
    out += std::to_string(v);
    out += ' ';
  }
  out += '(';
  for (std::size_t i = 0; i < w.cycle.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w.cycle[i]);
  }
  out += ")^ω";
  return out;
}

}  // namespace prv
