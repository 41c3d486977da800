#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "prv/acceptance.hpp"
#include "prv/generators.hpp"
#include "prv/oracle.hpp"

using namespace prv;
using prv::testing::make_arena;
using prv::testing::pay;
using prv::testing::self_loop;

namespace {

// Evaluates a formula on an explicit set of (objective, priority) marks.
bool eval_on_marks(const AcceptanceFormula& f, const MarkTable& table,
                   const std::vector<Mark>& present) {
  std::vector<bool> bits(table.count(), false);
  for (const Mark& m : present) bits[table.id(m.objective, m.priority)] = true;
  return eval_on_present(f, bits);
}

GameArena random_arena(std::mt19937_64& rng, std::uint32_t n, std::uint32_t t,
                       std::uint32_t d) {
  return gen_random(n, t, d, rng());
}

}  // namespace

TEST_CASE("mark table numbers marks objective-major") {
  MarkTable table(std::vector<std::uint32_t>{2, 4, 2});
  CHECK(table.count() == 3 + 5 + 3);
  CHECK(table.id(0, 0) == 0);
  CHECK(table.id(1, 0) == 3);
  CHECK(table.id(2, 2) == 10);
  Mark m = table.decode(7);
  CHECK(m.objective == 1);
  CHECK(m.priority == 4);
}

TEST_CASE("parity unfolding for small maxima") {
  MarkTable table(std::vector<std::uint32_t>{2, 2, 0});

  AcceptanceFormula direct = parity_formula(table, 1, false);
  AcceptanceFormula expected = AcceptanceFormula::disj(
      {AcceptanceFormula::inf(table.id(1, 0)),
       AcceptanceFormula::conj({AcceptanceFormula::fin(table.id(1, 1)),
                                AcceptanceFormula::inf(table.id(1, 2))})});
  CHECK(direct == expected);

  CHECK(parity_formula(table, 2, false) == AcceptanceFormula::inf(table.id(2, 0)));

  AcceptanceFormula complement = parity_formula(table, 1, true);
  AcceptanceFormula dual = AcceptanceFormula::conj(
      {AcceptanceFormula::fin(table.id(1, 0)),
       AcceptanceFormula::disj({AcceptanceFormula::inf(table.id(1, 1)),
                                AcceptanceFormula::fin(table.id(1, 2))})});
  CHECK(complement == dual);

  // Brute-force equivalence with negated evaluation over all mark subsets.
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<Mark> present;
    for (std::uint32_t p = 0; p < 3; ++p)
      if ((mask >> p) & 1) present.push_back({1, p});
    CHECK(eval_on_marks(complement, table, present) !=
          eval_on_marks(direct, table, present));
  }
}

TEST_CASE("payoff formulas compose parities") {
  MarkTable t1(std::vector<std::uint32_t>{0, 0});
  CHECK(payoff_eq_formula(t1, pay({1})) == AcceptanceFormula::inf(t1.id(1, 0)));

  MarkTable t2(std::vector<std::uint32_t>{0, 0, 0});
  AcceptanceFormula f = payoff_eq_formula(t2, pay({1, 0}));
  CHECK(f == AcceptanceFormula::conj({parity_formula(t2, 1, false),
                                      parity_formula(t2, 2, true)}));

  CHECK(payoff_geq_formula(t2, pay({0, 0})).is_true());
}

TEST_CASE("payoff formulas partition the intersection example's loops") {
  GameArena arena = gen_intersection(1, false, false);
  MarkTable table(arena);
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
    std::vector<std::uint32_t> cycle{v};
    std::uint32_t matches = 0;
    Payoff matched = Payoff::bottom(4);
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      Payoff p(4, bits);
      if (eval_on_inf_set(payoff_eq_formula(table, p), table, arena, cycle)) {
        ++matches;
        matched = p;
      }
    }
    CHECK(matches == 1);
    // The displayed payoff equals the priority-encoded one.
    Payoff displayed = Payoff::bottom(4);
    for (std::uint32_t i = 1; i <= 4; ++i)
      displayed = displayed.with_bit(i - 1, arena.priorities[v][i] % 2 == 0);
    CHECK(matched == displayed);
  }
}

TEST_CASE("extended formulas on the intersection example") {
  GameArena arena = gen_intersection(1, false, false);
  MarkTable table(arena);

  // The instance is positive: no lost play realizes (1,0,1,1).
  AcceptanceFormula lost_pareto =
      extended_formula(table, false, pay({1, 0, 1, 1}), PayoffMode::eq);
  bool any = false;
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
    std::vector<std::uint32_t> cycle{v};
    any = any || eval_on_inf_set(lost_pareto, table, arena, cycle);
  }
  CHECK_FALSE(any);

  // The won (1,1,0,0) loop of the last branch satisfies its own label.
  AcceptanceFormula won =
      extended_formula(table, true, pay({1, 1, 0, 0}), PayoffMode::eq);
  std::vector<std::uint32_t> last_branch_loop{21};
  CHECK(eval_on_inf_set(won, table, arena, last_branch_loop));
}

TEST_CASE("antichain avoidance formula") {
  MarkTable table(std::vector<std::uint32_t>{2, 2, 2, 2});

  CHECK(not_strictly_below_formula(table, {}, false).is_true());
  AcceptanceFormula lost_only = not_strictly_below_formula(table, {}, true);
  CHECK(lost_only == parity_formula(table, 0, true));

  // Singleton top: only dominating the top payoff qualifies.
  Antichain top = Antichain::ceil({pay({1, 1, 1})});
  AcceptanceFormula f = not_strictly_below_formula(table, top, false);
  CHECK(f == AcceptanceFormula::conj({parity_formula(table, 1, false),
                                      parity_formula(table, 2, false),
                                      parity_formula(table, 3, false)}));

  // Node count stays linear in |A| * t * d.
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    Antichain a;
    for (int i = 0; i < 6; ++i) a.insert(Payoff(3, rng() % 8));
    AcceptanceFormula g = not_strictly_below_formula(table, a, true);
    CHECK(g.node_count() <= 8 * (a.size() + 1) * 3 * 4);
  }
}

TEST_CASE("antichain avoidance is unsatisfiable on the positive example") {
  GameArena arena = gen_intersection(1, false, false);
  MarkTable table(arena);
  Antichain pareto = Antichain::ceil({pay({1, 0, 1, 1}), pay({1, 1, 0, 0})});
  AcceptanceFormula f = not_strictly_below_formula(table, pareto, true);
  for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
    std::vector<std::uint32_t> cycle{v};
    CHECK_FALSE(eval_on_inf_set(f, table, arena, cycle));
  }
}

TEST_CASE("formula evaluation basics") {
  MarkTable table(std::vector<std::uint32_t>{0, 2});
  CHECK(eval_on_marks(AcceptanceFormula::True(), table, {}));
  CHECK_FALSE(eval_on_marks(AcceptanceFormula::inf(table.id(1, 1)), table, {{1, 0}}));
  CHECK(eval_on_marks(AcceptanceFormula::fin(table.id(1, 1)), table, {{1, 0}}));
}

TEST_CASE("payoff formulas partition every inf-set") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 25; ++round) {
    std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % 3);
    GameArena arena = random_arena(rng, 2 + rng() % 7, t, 2 + 2 * (rng() % 2));
    MarkTable table(arena);
    for (const auto& set : prv::enumerate_inf_sets(arena)) {
      std::uint32_t matches = 0;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t); ++bits)
        if (eval_on_inf_set(payoff_eq_formula(table, Payoff(t, bits)), table, arena, set))
          ++matches;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("complement evaluation negates on nonempty inf-sets") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 40; ++round) {
    GameArena arena = random_arena(rng, 6, 3, 4);
    MarkTable table(arena);
    for (std::uint32_t i = 0; i <= 3; ++i) {
      AcceptanceFormula direct = parity_formula(table, i, false);
      AcceptanceFormula complement = parity_formula(table, i, true);
      for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
        std::vector<std::uint32_t> set{v, (v + 1) % arena.vertex_count()};
        CHECK(eval_on_inf_set(direct, table, arena, set) !=
              eval_on_inf_set(complement, table, arena, set));
      }
    }
  }
}

TEST_CASE("streett pair shapes and counts") {
  GameArena arena = make_arena({2, 2}, {{1, {0, 1}, {1}}, {1, {1, 0}, {0}}});

  StreettPairs one = conjunction_to_streett(arena, pay({1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].e == std::vector<std::uint32_t>{1});  // priority 0 vertices
  CHECK(one[0].f == std::vector<std::uint32_t>{0});  // priority 1 vertices

  GameArena arena2 =
      make_arena({2, 2, 2}, {{1, {0, 1, 2}, {1}}, {1, {1, 0, 1}, {0}}});
  CHECK(conjunction_to_streett(arena2, pay({1, 1})).size() == 2);

  // Equality mode adds the shifted complement pairs: d/2 + 1 per 0-bit.
  CHECK(conjunction_to_streett(arena2, pay({1, 0}), PayoffMode::eq).size() == 1 + 2);
}

TEST_CASE("streett pairs agree with the dominance formula on random arenas") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % 4);
    GameArena arena = random_arena(rng, 1 + rng() % 8, t, 2 + 2 * (rng() % 2));
    MarkTable table(arena);
    Payoff p(t, rng() & ((std::uint64_t{1} << t) - 1));
    StreettPairs geq_pairs = conjunction_to_streett(arena, p, PayoffMode::geq);
    AcceptanceFormula geq = payoff_geq_formula(table, p);
    StreettPairs eq_pairs = conjunction_to_streett(arena, p, PayoffMode::eq);
    AcceptanceFormula eq = payoff_eq_formula(table, p);

    // Exhaustively over vertex subsets; only plausible inf-sets matter,
    // but the encodings agree on every nonempty subset.
    for (std::uint32_t mask = 1; mask < (1u << arena.vertex_count()); ++mask) {
      std::vector<std::uint32_t> set;
      for (std::uint32_t v = 0; v < arena.vertex_count(); ++v)
        if ((mask >> v) & 1) set.push_back(v);
      CHECK(streett_accepts(geq_pairs, set) == eval_on_inf_set(geq, table, arena, set));
      CHECK(streett_accepts(eq_pairs, set) == eval_on_inf_set(eq, table, arena, set));
    }
  }
}

TEST_CASE("formula pretty printer is stable") {
  MarkTable table(std::vector<std::uint32_t>{2, 2});
  AcceptanceFormula f = parity_formula(table, 1, false);
  CHECK(f.to_string(table) == "(Inf(1:0) | (Fin(1:1) & Inf(1:2)))");
  CHECK(AcceptanceFormula::True().to_string(table) == "t");
}
