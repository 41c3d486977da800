#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "prv/arena.hpp"

namespace prv {

/// CNF formula with at most three literals per clause. Literals are signed
/// 1-based variable indices.
struct CnfClause {
  std::vector<std::int32_t> literals;
};

struct CnfFormula {
  std::uint32_t variable_count = 0;
  std::vector<CnfClause> clauses;
};

/// Empty iff the formula is well-formed: at least one clause, one to three
/// literals each, literal indices in range, every variable occurring
/// somewhere.
std::vector<std::string> validate(const CnfFormula& formula);

/// Whether all valuations falsify the formula (truth-table enumeration).
bool unsatisfiable(const CnfFormula& formula);

/// The traffic-intersection arena: a 22-vertex single-player arena whose
/// self-loops realize the fixed extended payoffs of the running example,
/// with t = 4 objectives. For copies > 1, disjoint copies hang off a fresh
/// initial vertex. With per_copy_objectives, the crossing-order objectives
/// are duplicated per copy (t = 2 + 2*copies) while the no-wait and
/// simultaneous-crossing objectives stay shared; the shared objectives
/// keep the first and last payoff positions, so copies = 1 coincides with
/// the shared layout. With negative, the lost bit is set on the final
/// loop of the last branch realizing (1,1,0,0), making that Pareto-optimal
/// payoff reachable by a lost play.
GameArena gen_intersection(std::uint32_t copies, bool per_copy_objectives, bool negative);

struct OutDegreeRange {
  std::uint32_t min = 1;
  std::uint32_t max = 4;
};

/// Random single-player arena: out-degrees drawn uniformly from the range,
/// targets uniform without replacement, priorities uniform in 0..d per
/// objective. Deterministic for a fixed seed, independent of platform.
GameArena gen_random(std::uint32_t vertices, std::uint32_t objectives, std::uint32_t d,
                     std::uint64_t seed, OutDegreeRange out_degree = {});

/// Reduction arena for a CNF formula: a choice between a valuation cycle
/// and per-clause cycles, with objectives (system, no-wait analogue,
/// per-literal valuation pair per variable, one objective per clause
/// literal) laid out so the instance is positive exactly when the formula
/// is unsatisfiable.
GameArena gen_from_cnf(const CnfFormula& formula);

/// DIMACS CNF reader ("p cnf <vars> <clauses>", 0-terminated clauses,
/// 'c' comment lines). Throws parse_error (see io.hpp) on malformed input
/// and std::invalid_argument when the formula violates the CnfFormula
/// invariants.
CnfFormula parse_dimacs(std::istream& in);

}  // namespace prv
