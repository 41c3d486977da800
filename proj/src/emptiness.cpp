#include "prv/emptiness.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace prv {

namespace {

// Iterative Tarjan over the subgraph induced by a membership flag.
struct TarjanState {
  const GameArena& arena;
  const std::vector<bool>& member;
  std::vector<std::uint32_t> index, low;
  std::vector<bool> on_stack;
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;
  std::vector<std::vector<std::uint32_t>> components;

  static constexpr std::uint32_t kUnvisited = UINT32_MAX;

  TarjanState(const GameArena& arena, const std::vector<bool>& member)
      : arena(arena),
        member(member),
        index(arena.vertex_count(), kUnvisited),
        low(arena.vertex_count(), 0),
        on_stack(arena.vertex_count(), false) {}

  void run(std::uint32_t root) {
    struct Frame {
      std::uint32_t vertex;
      std::size_t next_succ;
    };
    std::vector<Frame> frames;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      const auto& succ = arena.successors[frame.vertex];
      bool descended = false;
      while (frame.next_succ < succ.size()) {
        std::uint32_t w = succ[frame.next_succ++];
        if (!member[w]) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[frame.vertex] = std::min(low[frame.vertex], index[w]);
      }
      if (descended) continue;

      std::uint32_t v = frame.vertex;
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> component;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().vertex] = std::min(low[frames.back().vertex], low[v]);
    }
  }
};

std::vector<std::vector<std::uint32_t>> sccs_of(const GameArena& arena,
                                                const std::vector<bool>& member) {
  TarjanState tarjan(arena, member);
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v)
    if (member[v] && tarjan.index[v] == TarjanState::kUnvisited) tarjan.run(v);
  std::sort(tarjan.components.begin(), tarjan.components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return tarjan.components;
}

bool nontrivial(const GameArena& arena, const std::vector<std::uint32_t>& component) {
  return component.size() > 1 || arena.has_edge(component.front(), component.front());
}

std::vector<bool> membership(const GameArena& arena,
                             std::span<const std::uint32_t> vertices) {
  std::vector<bool> member(arena.vertex_count(), false);
  for (std::uint32_t v : vertices) member[v] = true;
  return member;
}

// Shortest path from one vertex to another within the induced subgraph,
// following successor order; start == goal yields the one-vertex path.
std::vector<std::uint32_t> bfs_path(const GameArena& arena, const std::vector<bool>& member,
                                    std::uint32_t start, std::uint32_t goal) {
  std::vector<std::uint32_t> parent(arena.vertex_count(), UINT32_MAX);
  std::deque<std::uint32_t> queue{start};
  parent[start] = start;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    if (v == goal) break;
    for (std::uint32_t w : arena.successors[v]) {
      if (!member[w] || parent[w] != UINT32_MAX) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  assert(parent[goal] != UINT32_MAX && "path target unreachable");
  std::vector<std::uint32_t> path{goal};
  for (std::uint32_t v = goal; v != start; v = parent[v]) path.push_back(parent[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Lasso reaching `component` (a strongly connected set with an internal
// edge) and cycling through all of it.
Lasso build_lasso(const GameArena& arena, const std::vector<std::uint32_t>& component) {
  const std::uint32_t anchor = component.front();

  Lasso w;
  std::vector<bool> all(arena.vertex_count(), true);
  std::vector<std::uint32_t> to_anchor = bfs_path(arena, all, arena.initial, anchor);
  w.prefix.assign(to_anchor.begin(), to_anchor.end() - 1);

  if (component.size() == 1) {
    w.cycle = {anchor};
    return w;
  }
  std::vector<bool> member = membership(arena, component);
  std::vector<std::uint32_t> walk{anchor};
  for (std::size_t i = 1; i < component.size(); ++i) {
    auto leg = bfs_path(arena, member, walk.back(), component[i]);
    walk.insert(walk.end(), leg.begin() + 1, leg.end());
  }
  auto closing = bfs_path(arena, member, walk.back(), anchor);
  walk.insert(walk.end(), closing.begin() + 1, closing.end());
  walk.pop_back();  // drop the repeated anchor; the closing edge wraps around
  w.cycle = std::move(walk);
  return w;
}

struct Engine {
  const GameArena& arena;
  const MarkTable& marks;
  EmptinessStats* stats;

  std::optional<std::vector<std::uint32_t>> solve(const std::vector<std::uint32_t>& component,
                                                  AcceptanceFormula f) {
    if (stats) ++stats->scc_solves;
    f = f.restrict_to_present(present_marks(marks, arena, component));
    if (f.is_false()) return std::nullopt;
    if (f.fin_free()) {
      // Every remaining atom is an Inf over a mark present here, so the
      // whole component satisfies the residual.
      return component;
    }
    std::uint32_t m = *f.lowest_fin_mark();
    if (stats) ++stats->branchings;

    // Case (a): the inf-set avoids the mark entirely.
    Mark decoded = marks.decode(m);
    std::vector<std::uint32_t> kept;
    for (std::uint32_t v : component)
      if (vertex_mark(marks, arena, v, decoded.objective) != m) kept.push_back(v);
    AcceptanceFormula avoided = f.assign_mark(m, false, true);
    if (!avoided.is_false() && !kept.empty()) {
      std::vector<bool> member = membership(arena, kept);
      for (const auto& sub : sccs_of(arena, member)) {
        if (!nontrivial(arena, sub)) continue;
        if (auto hit = solve(sub, avoided)) return hit;
      }
    }

    // Case (b): the inf-set keeps some carrier of the mark.
    AcceptanceFormula kept_mark = f.assign_mark(m, std::nullopt, false);
    if (kept_mark.is_false()) return std::nullopt;
    return solve(component, kept_mark);
  }
};

std::vector<std::uint32_t> reachable_list(const GameArena& arena) {
  std::vector<bool> seen = reachable(arena);
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

void require_single_player(const GameArena& arena, const char* fnname) {
  if (!single_player(arena))
    throw std::invalid_argument(std::string(fnname) + ": arena must be single-player");
}

}  // namespace

std::vector<std::vector<std::uint32_t>> sccs(const GameArena& arena,
                                             std::span<const std::uint32_t> restrict_set) {
  return sccs_of(arena, membership(arena, restrict_set));
}

std::optional<Lasso> check(const GameArena& arena, const MarkTable& marks,
                           const AcceptanceFormula& f, EmptinessStats* stats) {
  require_single_player(arena, "emptiness check");
  Engine engine{arena, marks, stats};
  std::vector<std::uint32_t> reach = reachable_list(arena);
  std::vector<bool> member = membership(arena, reach);
  for (const auto& component : sccs_of(arena, member)) {
    if (!nontrivial(arena, component)) continue;
    if (auto hit = engine.solve(component, f)) {
      Lasso witness = build_lasso(arena, *hit);
      assert(eval_on_inf_set(f, marks, arena, witness.cycle) && "unsound witness");
      return witness;
    }
  }
  return std::nullopt;
}

std::optional<Lasso> streett_check(const GameArena& arena, const StreettPairs& pairs) {
  require_single_player(arena, "streett check");

  std::vector<std::vector<bool>> e_mask, f_mask;
  e_mask.reserve(pairs.size());
  f_mask.reserve(pairs.size());
  for (const StreettPair& pair : pairs) {
    e_mask.push_back(membership(arena, pair.e));
    f_mask.push_back(membership(arena, pair.f));
  }

  // Refine: a component violating some pair can only host inf-sets that
  // avoid that pair's F-vertices. Depth-first worklist, keeping the
  // smallest-id-first exploration order.
  std::vector<std::uint32_t> reach = reachable_list(arena);
  std::vector<bool> member = membership(arena, reach);
  std::vector<std::vector<std::uint32_t>> worklist = sccs_of(arena, member);
  std::reverse(worklist.begin(), worklist.end());

  while (!worklist.empty()) {
    std::vector<std::uint32_t> component = std::move(worklist.back());
    worklist.pop_back();
    if (!nontrivial(arena, component)) continue;

    std::vector<bool> removed(arena.vertex_count(), false);
    bool any_violated = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      bool hits_f = false, hits_e = false;
      for (std::uint32_t v : component) {
        hits_f = hits_f || f_mask[i][v];
        hits_e = hits_e || e_mask[i][v];
      }
      if (hits_f && !hits_e) {
        any_violated = true;
        for (std::uint32_t v : component)
          if (f_mask[i][v]) removed[v] = true;
      }
    }
    if (!any_violated) {
      Lasso witness = build_lasso(arena, component);
      assert(streett_accepts(pairs, witness.cycle) && "unsound streett witness");
      return witness;
    }

    std::vector<std::uint32_t> kept;
    for (std::uint32_t v : component)
      if (!removed[v]) kept.push_back(v);
    if (kept.empty()) continue;
    std::vector<bool> sub_member = membership(arena, kept);
    auto refined = sccs_of(arena, sub_member);
    worklist.insert(worklist.end(), refined.rbegin(), refined.rend());
  }
  return std::nullopt;
}

ExtendedPayoff evaluate_inf_set(const GameArena& arena,
                                std::span<const std::uint32_t> vertices) {
  assert(!vertices.empty());
  const std::uint32_t t = arena.objective_count();
  ExtendedPayoff out;
  out.payoff = Payoff::bottom(t);
  for (std::uint32_t i = 0; i <= t; ++i) {
    std::uint32_t min_priority = UINT32_MAX;
    for (std::uint32_t v : vertices)
      min_priority = std::min(min_priority, arena.priorities[v][i]);
    bool satisfied = min_priority % 2 == 0;
    if (i == 0)
      out.won = satisfied;
    else
      out.payoff = out.payoff.with_bit(i - 1, satisfied);
  }
  return out;
}

PlayReport witness_to_play_report(const GameArena& arena, const Lasso& w) {
  auto violations = validate_lasso(arena, w);
  if (!violations.empty())
    throw std::invalid_argument("witness_to_play_report: " + violations.front());
  PlayReport report;
  report.extended = evaluate_inf_set(arena, w.cycle);
  report.text = lasso_to_string(w) + " : " + report.extended.to_string();
  return report;
}

}  // namespace prv
