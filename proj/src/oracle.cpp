#include "prv/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "prv/emptiness.hpp"  // evaluate_inf_set: the shared min-even rule

namespace prv {

namespace {

std::vector<std::uint32_t> reachable_list(const GameArena& arena) {
  std::vector<bool> seen = reachable(arena);
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

// Shortest path start -> goal restricted to `member`, by breadth-first
// search in successor order. Independent of the emptiness engine.
std::vector<std::uint32_t> walk_between(const GameArena& arena,
                                        const std::vector<bool>& member,
                                        std::uint32_t start, std::uint32_t goal) {
  std::vector<std::uint32_t> parent(arena.vertex_count(), UINT32_MAX);
  std::vector<std::uint32_t> queue{start};
  parent[start] = start;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t v = queue[head];
    if (v == goal) break;
    for (std::uint32_t w : arena.successors[v]) {
      if (!member[w] || parent[w] != UINT32_MAX) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  std::vector<std::uint32_t> path{goal};
  for (std::uint32_t v = goal; v != start; v = parent[v]) path.push_back(parent[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Lasso reaching `set` and cycling through all of it.
Lasso covering_lasso(const GameArena& arena, const std::vector<std::uint32_t>& set) {
  Lasso w;
  std::vector<bool> everywhere(arena.vertex_count(), true);
  auto to_anchor = walk_between(arena, everywhere, arena.initial, set.front());
  w.prefix.assign(to_anchor.begin(), to_anchor.end() - 1);
  if (set.size() == 1) {
    w.cycle = {set.front()};
    return w;
  }
  std::vector<bool> member(arena.vertex_count(), false);
  for (std::uint32_t v : set) member[v] = true;
  std::vector<std::uint32_t> walk{set.front()};
  for (std::size_t i = 1; i < set.size(); ++i) {
    auto leg = walk_between(arena, member, walk.back(), set[i]);
    walk.insert(walk.end(), leg.begin() + 1, leg.end());
  }
  auto closing = walk_between(arena, member, walk.back(), set.front());
  walk.insert(walk.end(), closing.begin() + 1, closing.end());
  walk.pop_back();
  w.cycle = std::move(walk);
  return w;
}

// Strongly connected with at least one internal edge, over the induced
// subgraph. Forward and backward closure from the first member.
bool connected_inf_set(const GameArena& arena, const std::vector<std::uint32_t>& set) {
  std::vector<bool> member(arena.vertex_count(), false);
  for (std::uint32_t v : set) member[v] = true;
  if (set.size() == 1) return arena.has_edge(set.front(), set.front());

  auto closure = [&](bool forward) {
    std::vector<bool> seen(arena.vertex_count(), false);
    std::vector<std::uint32_t> stack{set.front()};
    seen[set.front()] = true;
    std::size_t found = 1;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t from = 0; from < arena.vertex_count() && !forward; ++from) {
        if (!member[from] || seen[from]) continue;
        if (arena.has_edge(from, v)) {
          seen[from] = true;
          ++found;
          stack.push_back(from);
        }
      }
      if (forward)
        for (std::uint32_t w : arena.successors[v]) {
          if (!member[w] || seen[w]) continue;
          seen[w] = true;
          ++found;
          stack.push_back(w);
        }
    }
    return found == set.size();
  };
  return closure(true) && closure(false);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_inf_sets(const GameArena& arena,
                                                           std::uint32_t cap) {
  std::vector<std::uint32_t> reach = reachable_list(arena);
  if (reach.size() > cap)
    throw std::runtime_error("oracle: " + std::to_string(reach.size()) +
                             " reachable vertices exceed the cap of " +
                             std::to_string(cap));
  std::vector<std::vector<std::uint32_t>> out;
  const std::uint64_t subsets = std::uint64_t{1} << reach.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::uint32_t> set;
    for (std::size_t i = 0; i < reach.size(); ++i)
      if ((mask >> i) & 1) set.push_back(reach[i]);
    if (connected_inf_set(arena, set)) out.push_back(std::move(set));
  }
  return out;
}

std::vector<ExtendedPayoff> oracle_realizable(const GameArena& arena, std::uint32_t cap) {
  std::vector<ExtendedPayoff> out;
  for (const auto& set : enumerate_inf_sets(arena, cap))
    out.push_back(evaluate_inf_set(arena, set));
  std::sort(out.begin(), out.end(),
            [](const ExtendedPayoff& a, const ExtendedPayoff& b) { return tuple_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationResult oracle_verify(const GameArena& arena, std::uint32_t cap) {
  VerificationResult result;
  result.positive = true;

  auto inf_sets = enumerate_inf_sets(arena, cap);
  std::vector<Payoff> payoffs;
  payoffs.reserve(inf_sets.size());
  for (const auto& set : inf_sets) payoffs.push_back(evaluate_inf_set(arena, set).payoff);
  Antichain pareto = Antichain::ceil(payoffs);

  for (std::size_t i = 0; i < inf_sets.size(); ++i) {
    ExtendedPayoff extended = evaluate_inf_set(arena, inf_sets[i]);
    if (!extended.won && pareto.contains(extended.payoff)) {
      result.positive = false;
      result.counterexample = covering_lasso(arena, inf_sets[i]);
      break;
    }
  }
  if (result.positive) result.certificate = std::move(pareto);
  return result;
}

bool oracle_check_formula(const GameArena& arena, const MarkTable& marks,
                          const AcceptanceFormula& f, std::uint32_t cap) {
  for (const auto& set : enumerate_inf_sets(arena, cap))
    if (eval_on_inf_set(f, marks, arena, set)) return true;
  return false;
}

}  // namespace prv
