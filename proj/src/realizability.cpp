#include "prv/realizability.hpp"

#include <cassert>
#include <stdexcept>

namespace prv {

RealizabilityQueries::RealizabilityQueries(const GameArena& arena)
    : arena_(arena), marks_(arena) {
  if (!single_player(arena))
    throw std::invalid_argument("realizability: arena must be single-player");
}

std::optional<Lasso> RealizabilityQueries::payoff_eq(const Payoff& p) const {
  ++calls_;
  return check(arena_, marks_, payoff_eq_formula(marks_, p));
}

std::optional<Lasso> RealizabilityQueries::payoff_geq(const Payoff& p) const {
  ++calls_;
  return streett_check(arena_, conjunction_to_streett(arena_, p, PayoffMode::geq));
}

std::optional<Lasso> RealizabilityQueries::extended(bool won, const Payoff& p,
                                                    PayoffMode mode) const {
  ++calls_;
  if (mode == PayoffMode::geq) {
    std::vector<ParityAtom> atoms{{0, !won}};
    for (std::uint32_t i = 0; i < p.size(); ++i)
      if (p.bit(i)) atoms.push_back({i + 1, false});
    return streett_check(arena_, streett_pairs(arena_, atoms));
  }
  return check(arena_, marks_, extended_formula(marks_, won, p, PayoffMode::eq));
}

bool RealizabilityQueries::pareto_optimal(const Payoff& p) const {
  assert(payoff_eq(p).has_value() && "pareto_optimal expects a realizable payoff");
  for (const Payoff& q : one_bit_up(p))
    if (payoff_geq(q)) return false;
  return true;
}

std::optional<Lasso> RealizabilityQueries::lost_not_below(const Antichain& a) const {
  ++calls_;
  return check(arena_, marks_, not_strictly_below_formula(marks_, a, /*lost_only=*/true));
}

}  // namespace prv
