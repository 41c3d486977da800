#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "prv/emptiness.hpp"
#include "prv/generators.hpp"
#include "prv/oracle.hpp"

using namespace prv;
using prv::testing::make_arena;
using prv::testing::pay;
using prv::testing::self_loop;

TEST_CASE("inf-set enumeration on small graphs") {
  GameArena loop = self_loop({0, 0}, {0, 0});
  auto sets = enumerate_inf_sets(loop);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == std::vector<std::uint32_t>{0});

  // 2-cycle without self-loops: the singletons are not inf-sets.
  GameArena cycle = make_arena({0, 0}, {{1, {0, 0}, {1}}, {1, {0, 0}, {0}}});
  sets = enumerate_inf_sets(cycle);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("inf-set enumeration respects reachability") {
  GameArena arena = make_arena({0, 0}, {{1, {0, 0}, {0}}, {1, {0, 0}, {1}}});
  auto sets = enumerate_inf_sets(arena);  // vertex 1 unreachable
  REQUIRE(sets.size() == 1);
  CHECK(sets[0] == std::vector<std::uint32_t>{0});
}

TEST_CASE("the intersection example has exactly its 22 self-loop inf-sets") {
  GameArena arena = gen_intersection(1, false, false);
  auto sets = enumerate_inf_sets(arena, 22);
  CHECK(sets.size() == 22);
  for (const auto& set : sets) CHECK(set.size() == 1);
}

TEST_CASE("the cap is a hard error") {
  GameArena arena = gen_intersection(1, false, false);
  CHECK_THROWS_AS(enumerate_inf_sets(arena), std::runtime_error);  // 22 > 16
}

namespace {

// Breadth-first path within a vertex set; empty when unreachable.
std::vector<std::uint32_t> path_within(const GameArena& arena,
                                       const std::vector<std::uint32_t>& set,
                                       std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> parent(arena.vertex_count(), UINT32_MAX);
  std::vector<std::uint32_t> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t w : arena.successors[queue[head]]) {
      if (parent[w] != UINT32_MAX) continue;
      if (!set.empty() && std::find(set.begin(), set.end(), w) == set.end()) continue;
      parent[w] = queue[head];
      queue.push_back(w);
    }
  }
  if (parent[to] == UINT32_MAX) return {};
  std::vector<std::uint32_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

TEST_CASE("every enumerated inf-set arises from an actual lasso") {
  GameArena arena = gen_random(8, 2, 2, 99);
  for (const auto& set : enumerate_inf_sets(arena)) {
    // Constructive check: build the covering closed walk by hand and
    // validate the resulting lasso against the arena.
    Lasso lasso;
    auto to_anchor = path_within(arena, {}, arena.initial, set.front());
    REQUIRE_FALSE(to_anchor.empty());
    lasso.prefix.assign(to_anchor.begin(), to_anchor.end() - 1);
    if (set.size() == 1) {
      lasso.cycle = set;
    } else {
      std::vector<std::uint32_t> walk{set.front()};
      for (std::size_t i = 1; i <= set.size(); ++i) {
        std::uint32_t next = i < set.size() ? set[i] : set.front();
        auto leg = path_within(arena, set, walk.back(), next);
        REQUIRE_FALSE(leg.empty());
        walk.insert(walk.end(), leg.begin() + 1, leg.end());
      }
      walk.pop_back();
      lasso.cycle = std::move(walk);
    }
    CHECK(validate_lasso(arena, lasso).empty());
    std::set<std::uint32_t> covered(lasso.cycle.begin(), lasso.cycle.end());
    CHECK(covered == std::set<std::uint32_t>(set.begin(), set.end()));
  }
}

TEST_CASE("oracle payoffs and verdict on the intersection example") {
  GameArena arena = gen_intersection(1, false, false);
  auto realizable = oracle_realizable(arena, 22);

  std::set<Payoff, bool (*)(const Payoff&, const Payoff&)> projections(tuple_less);
  for (const ExtendedPayoff& e : realizable) projections.insert(e.payoff);
  CHECK(projections.size() == 9);

  Antichain pareto = Antichain::ceil({projections.begin(), projections.end()});
  CHECK(pareto == Antichain::ceil({pay({1, 0, 1, 1}), pay({1, 1, 0, 0})}));

  CHECK(oracle_verify(arena, 22).positive);

  GameArena negative = gen_intersection(1, false, true);
  VerificationResult refuted = oracle_verify(negative, 22);
  REQUIRE_FALSE(refuted.positive);
  REQUIRE(refuted.counterexample.has_value());
  CHECK(validate_lasso(negative, *refuted.counterexample).empty());
  ExtendedPayoff extended = evaluate_inf_set(negative, refuted.counterexample->cycle);
  CHECK_FALSE(extended.won);
  CHECK(extended.payoff == pay({1, 1, 0, 0}));
}

TEST_CASE("a single lost self-loop is a negative instance") {
  GameArena arena = self_loop({1, 0}, {2, 0});
  CHECK_FALSE(oracle_verify(arena).positive);
}

TEST_CASE("formula oracle basics") {
  GameArena arena = self_loop({0, 0}, {0, 0});
  MarkTable table(arena);
  CHECK(oracle_check_formula(arena, table, AcceptanceFormula::True()));
  CHECK_FALSE(oracle_check_formula(arena, table, AcceptanceFormula::False()));
}
