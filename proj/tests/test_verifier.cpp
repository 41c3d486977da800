#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "prv/emptiness.hpp"
#include "prv/generators.hpp"
#include "prv/oracle.hpp"
#include "prv/verifier.hpp"

using namespace prv;
using prv::testing::pay;
using prv::testing::self_loop;

namespace {

Antichain intersection_pareto() {
  return Antichain::ceil({pay({1, 0, 1, 1}), pay({1, 1, 0, 0})});
}

void check_negative_result(const GameArena& arena, const VerificationResult& result) {
  REQUIRE_FALSE(result.positive);
  REQUIRE(result.counterexample.has_value());
  CHECK(validate_lasso(arena, *result.counterexample).empty());
  ExtendedPayoff extended = evaluate_inf_set(arena, result.counterexample->cycle);
  CHECK_FALSE(extended.won);
  RealizabilityQueries queries(arena);
  CHECK(queries.pareto_optimal(extended.payoff));
}

}  // namespace

TEST_CASE("pareto set of the intersection example") {
  CHECK(compute_pareto_set(gen_intersection(1, false, false)) == intersection_pareto());

  GameArena loop = self_loop({0, 1, 0}, {0, 2, 2});
  Antichain expected = Antichain::ceil({pay({0, 1})});
  CHECK(compute_pareto_set(loop) == expected);

  // Copies are identical, so the Pareto set is independent of the count.
  CHECK(compute_pareto_set(gen_intersection(3, false, false)) == intersection_pareto());
}

TEST_CASE("all three algorithms accept the intersection example") {
  GameArena arena = gen_intersection(1, false, false);

  VerificationResult naive = naive_verify(arena);
  CHECK(naive.positive);
  REQUIRE(naive.certificate.has_value());
  CHECK(*naive.certificate == intersection_pareto());

  VerificationResult antichain = antichain_verify(arena);
  CHECK(antichain.positive);
  REQUIRE(antichain.certificate.has_value());
  CHECK(*antichain.certificate == intersection_pareto());

  VerificationResult ce = counterexample_verify(arena);
  CHECK(ce.positive);
  REQUIRE(ce.certificate.has_value());
  CHECK(check_certificate(arena, *ce.certificate));
  CHECK(antichain_below(*ce.certificate, intersection_pareto()) != AntichainCmp::neither);
}

TEST_CASE("all three algorithms reject the negative variant") {
  GameArena arena = gen_intersection(1, false, true);
  for (auto verify : {naive_verify, antichain_verify, counterexample_verify}) {
    VerificationResult result = verify(arena);
    check_negative_result(arena, result);
    CHECK(evaluate_inf_set(arena, result.counterexample->cycle).payoff ==
          pay({1, 1, 0, 0}));
  }
  // Early stop: the descent never grows the antichain past the first
  // Pareto-optimal payoff it proves lost.
  VerificationResult antichain = antichain_verify(arena);
  CHECK(antichain.stats.antichain_sizes.back() <= intersection_pareto().size());
}

TEST_CASE("counterexample algorithm rejects a single lost top-payoff cycle") {
  GameArena arena = self_loop({1, 0, 0}, {2, 0, 0});
  VerificationResult result = counterexample_verify(arena);
  REQUIRE_FALSE(result.positive);
  CHECK(result.stats.iterations == 1);
  CHECK(evaluate_inf_set(arena, result.counterexample->cycle).payoff == pay({1, 1}));
}

TEST_CASE("reported counterexamples are lifted to Pareto-optimal payoffs") {
  // Two lost loops with comparable payoffs and no won play: the raw
  // counterexample query may surface the dominated one first.
  GameArena arena = prv::testing::make_arena(
      {2, 2, 2},
      {{1, {1, 1, 1}, {0, 1}}, {1, {1, 0, 0}, {1}}});
  VerificationResult result = counterexample_verify(arena);
  check_negative_result(arena, result);
  CHECK(evaluate_inf_set(arena, result.counterexample->cycle).payoff == pay({1, 1}));
}

TEST_CASE("full descent touches every payoff when only bottom is realizable") {
  GameArena arena = self_loop({0, 1, 1}, {0, 2, 2});
  VerificationResult result = antichain_verify(arena);
  CHECK(result.positive);
  CHECK(result.stats.iterations == 4);  // 2^t dequeues at t = 2
  REQUIRE(result.certificate.has_value());
  CHECK(result.certificate->elements() == std::vector<Payoff>{pay({0, 0})});
}

TEST_CASE("certificate checking") {
  GameArena arena = gen_intersection(1, false, false);
  CHECK(check_certificate(arena, intersection_pareto()));
  CHECK_FALSE(check_certificate(arena, {}));  // lost loops escape the empty antichain

  GameArena negative = gen_intersection(1, false, true);
  CHECK_FALSE(check_certificate(negative, intersection_pareto()));
  CHECK_FALSE(check_certificate(negative, {}));
  CHECK_FALSE(check_certificate(negative, Antichain::ceil({pay({1, 1, 1, 1})})));
}

TEST_CASE("counterexample algorithm grows a strictly increasing antichain") {
  std::mt19937_64 rng(401);
  for (int round = 0; round < 150; ++round) {
    std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % 4);
    GameArena arena = gen_random(2 + rng() % 9, t, 4, rng());
    VerificationResult result = counterexample_verify(arena);

    CHECK(result.stats.iterations <= (std::uint64_t{1} << t) + 1);
    const auto& history = result.stats.antichains;
    for (std::size_t i = 0; i + 1 < history.size(); ++i)
      CHECK(antichain_below(history[i], history[i + 1]) == AntichainCmp::strictly_below);
    if (!history.empty())
      CHECK(antichain_below(Antichain{}, history.front()) == AntichainCmp::strictly_below);

    RealizabilityQueries queries(arena);
    for (const Antichain& a : history)
      for (const Payoff& p : a.elements()) CHECK(queries.payoff_eq(p).has_value());

    if (result.positive) {
      REQUIRE(result.certificate.has_value());
      CHECK(check_certificate(arena, *result.certificate));
      CHECK(antichain_below(*result.certificate, compute_pareto_set(arena)) !=
            AntichainCmp::neither);
    }
  }
}

TEST_CASE("the three algorithms and the oracle agree on random instances") {
  std::mt19937_64 rng(402);
  int negatives = 0;
  for (int round = 0; round < 150; ++round) {
    std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % 4);
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 10);
    GameArena arena = gen_random(n, t, 2 + 2 * (rng() % 2), rng(),
                                 {1, 1 + static_cast<std::uint32_t>(rng() % 4)});

    VerificationResult expected = oracle_verify(arena);
    VerificationResult naive = naive_verify(arena);
    VerificationResult antichain = antichain_verify(arena);
    VerificationResult ce = counterexample_verify(arena);

    CHECK(naive.positive == expected.positive);
    CHECK(antichain.positive == expected.positive);
    CHECK(ce.positive == expected.positive);
    if (!expected.positive) {
      ++negatives;
      check_negative_result(arena, naive);
      check_negative_result(arena, antichain);
      check_negative_result(arena, ce);
    }

    // On positives, the descent's final antichain is exactly the Pareto set.
    std::vector<Payoff> projections;
    for (const ExtendedPayoff& e : oracle_realizable(arena))
      projections.push_back(e.payoff);
    Antichain pareto = Antichain::ceil(projections);
    CHECK(compute_pareto_set(arena) == pareto);
    if (expected.positive) CHECK(*antichain.certificate == pareto);
  }
  CHECK(negatives > 10);
}

TEST_CASE("agreement holds with deep priority ranges and messy successor lists") {
  std::mt19937_64 rng(403);
  for (int round = 0; round < 60; ++round) {
    std::uint32_t t = 1 + static_cast<std::uint32_t>(rng() % 3);
    GameArena arena = gen_random(2 + rng() % 8, t, 6, rng());

    // Unsorted and duplicated successor entries are legal inputs.
    for (auto& succ : arena.successors) {
      std::reverse(succ.begin(), succ.end());
      succ.push_back(succ.front());
    }
    arena.initial = static_cast<std::uint32_t>(rng() % arena.vertex_count());
    REQUIRE(validate(arena).empty());

    VerificationResult expected = oracle_verify(arena);
    CHECK(naive_verify(arena).positive == expected.positive);
    CHECK(antichain_verify(arena).positive == expected.positive);
    CHECK(counterexample_verify(arena).positive == expected.positive);
  }
}

TEST_CASE("verification results carry query statistics") {
  GameArena arena = gen_intersection(1, false, false);
  VerificationResult result = antichain_verify(arena);
  CHECK(result.stats.emptiness_calls > 0);
  CHECK(result.stats.iterations > 0);
  CHECK(result.stats.peak_antichain == 2);
  CHECK(result.stats.wall_seconds >= 0.0);
  CHECK_FALSE(result.stats.antichain_sizes.empty());

  VerificationResult ce = counterexample_verify(arena);
  CHECK(ce.stats.call_seconds.size() == ce.stats.iterations);
}
