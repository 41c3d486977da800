#include "prv/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

#include "prv/io.hpp"
#include "prv/lattice.hpp"

namespace prv {

namespace {

// ---------------------------------------------------------------------------
// Intersection example

// Extended payoff displayed on each self-loop, as {won, p1, p2, p3, p4},
// plus the branch edges of the arena. Every vertex also has a self-loop.
struct LoopVertex {
  std::array<std::uint8_t, 5> label;
};

constexpr std::array<LoopVertex, 22> kIntersectionLoops{{
    {{0, 0, 0, 0, 0}},  // 0: all lights red, everyone waits
    {{0, 0, 0, 0, 1}},  // 1: l1+l2 green together, crash
    {{0, 1, 0, 0, 1}},  // 2
    {{1, 0, 0, 1, 1}},  // 3: l1+l3 green together
    {{1, 1, 0, 1, 1}},  // 4: then l2, Pareto-optimal
    {{0, 0, 0, 0, 1}},  // 5: l2+l3 green together, crash
    {{0, 0, 0, 0, 1}},  // 6
    {{0, 0, 0, 1, 0}},  // 7: l3 green first
    {{0, 0, 0, 1, 0}},  // 8
    {{1, 1, 0, 1, 0}},  // 9
    {{1, 0, 0, 1, 0}},  // 10
    {{1, 1, 0, 1, 0}},  // 11
    {{0, 0, 1, 0, 0}},  // 12: l2 green first
    {{0, 0, 1, 0, 0}},  // 13
    {{1, 1, 1, 0, 0}},  // 14: Pareto-optimal
    {{1, 0, 1, 0, 0}},  // 15
    {{1, 1, 1, 0, 0}},  // 16: Pareto-optimal
    {{1, 0, 0, 0, 0}},  // 17: l1 green first
    {{1, 0, 0, 1, 0}},  // 18
    {{1, 1, 0, 1, 0}},  // 19
    {{1, 0, 1, 0, 0}},  // 20
    {{1, 1, 1, 0, 0}},  // 21: Pareto-optimal, flipped in the negative variant
}};

constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 21> kIntersectionEdges{{
    {0, 1},   {1, 2},                      // lights 1+2 together
    {0, 3},   {3, 4},                      // lights 1+3 together
    {0, 5},   {5, 6},                      // lights 2+3 together
    {0, 7},   {7, 8},  {8, 9},  {7, 10},  {10, 11},  // light 3 first
    {0, 12},  {12, 13}, {13, 14}, {12, 15}, {15, 16},  // light 2 first
    {0, 17},  {17, 18}, {18, 19}, {17, 20}, {20, 21},  // light 1 first
}};

constexpr std::uint32_t kIntersectionSize = 22;

// ---------------------------------------------------------------------------
// Deterministic sampling helpers. std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by hand to keep
// generated instances byte-stable across toolchains.

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

std::uint32_t draw_range(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(draw_below(rng, hi - lo + 1));
}

}  // namespace

GameArena gen_intersection(std::uint32_t copies, bool per_copy_objectives, bool negative) {
  if (copies == 0) throw std::invalid_argument("gen_intersection: copies must be >= 1");
  if (per_copy_objectives && 2 + 2 * copies > Payoff::kMaxObjectives)
    throw std::invalid_argument("gen_intersection: at most 31 copies with per-copy objectives");

  auto loops = kIntersectionLoops;
  if (negative) loops[21].label[0] = 0;  // the last branch's (1,1,0,0) loop turns lost

  const std::uint32_t t = per_copy_objectives ? 2 + 2 * copies : 4;
  const bool fresh_initial = copies > 1;
  const std::uint32_t base = fresh_initial ? 1 : 0;

  GameArena arena;
  const std::uint32_t n = base + copies * kIntersectionSize;
  arena.owner.assign(n, 1);
  arena.successors.resize(n);
  arena.priorities.assign(n, std::vector<std::uint32_t>(t + 1, 1));
  arena.max_priority.assign(t + 1, 2);
  arena.initial = 0;

  for (std::uint32_t copy = 0; copy < copies; ++copy) {
    const std::uint32_t offset = base + copy * kIntersectionSize;
    if (fresh_initial) arena.successors[0].push_back(offset);

    for (std::uint32_t j = 0; j < kIntersectionSize; ++j) {
      const auto& label = loops[j].label;
      auto& priorities = arena.priorities[offset + j];
      auto bit = [&](std::uint32_t objective, std::uint8_t satisfied) {
        priorities[objective] = satisfied ? 0 : 1;
      };
      bit(0, label[0]);
      if (!per_copy_objectives) {
        for (std::uint32_t i = 1; i <= 4; ++i) bit(i, label[i]);
      } else {
        // Shared objectives keep the outer payoff positions; the two
        // crossing-order objectives are private to this copy. Other
        // copies' order objectives stay at the unsatisfied priority.
        bit(1, label[1]);
        bit(t, label[4]);
        bit(2 + 2 * copy, label[2]);
        bit(3 + 2 * copy, label[3]);
      }
      arena.successors[offset + j].push_back(offset + j);  // self-loop
    }
    for (auto [from, to] : kIntersectionEdges)
      arena.successors[offset + from].push_back(offset + to);
  }
  return arena;
}

GameArena gen_random(std::uint32_t vertices, std::uint32_t objectives, std::uint32_t d,
                     std::uint64_t seed, OutDegreeRange out_degree) {
  if (vertices == 0) throw std::invalid_argument("gen_random: need at least one vertex");
  if (objectives == 0 || objectives > Payoff::kMaxObjectives)
    throw std::invalid_argument("gen_random: objectives must be in 1..64");
  if (d % 2 != 0) throw std::invalid_argument("gen_random: maximum priority must be even");
  if (out_degree.min < 1 || out_degree.min > out_degree.max)
    throw std::invalid_argument("gen_random: invalid out-degree range");

  std::mt19937_64 rng(seed);
  GameArena arena;
  arena.owner.assign(vertices, 1);
  arena.successors.resize(vertices);
  arena.priorities.assign(vertices, std::vector<std::uint32_t>(objectives + 1, 0));
  arena.max_priority.assign(objectives + 1, d);
  arena.initial = 0;

  std::vector<std::uint32_t> scratch(vertices);
  for (std::uint32_t v = 0; v < vertices; ++v) {
    std::uint32_t degree =
        std::min(vertices, draw_range(rng, out_degree.min, out_degree.max));
    // Partial Fisher-Yates: the first `degree` entries become the targets.
    for (std::uint32_t i = 0; i < vertices; ++i) scratch[i] = i;
    for (std::uint32_t i = 0; i < degree; ++i) {
      std::uint32_t j = i + static_cast<std::uint32_t>(draw_below(rng, vertices - i));
      std::swap(scratch[i], scratch[j]);
    }
    arena.successors[v].assign(scratch.begin(), scratch.begin() + degree);
    std::sort(arena.successors[v].begin(), arena.successors[v].end());
  }
  for (std::uint32_t v = 0; v < vertices; ++v)
    for (std::uint32_t i = 0; i <= objectives; ++i)
      arena.priorities[v][i] = static_cast<std::uint32_t>(draw_below(rng, d + 1));
  return arena;
}

// ---------------------------------------------------------------------------
// co3SAT reduction

std::vector<std::string> validate(const CnfFormula& formula) {
  std::vector<std::string> violations;
  if (formula.variable_count == 0) violations.push_back("formula declares no variables");
  if (formula.clauses.empty()) violations.push_back("formula has no clauses");

  std::vector<bool> occurs(formula.variable_count + 1, false);
  for (std::size_t i = 0; i < formula.clauses.size(); ++i) {
    const auto& clause = formula.clauses[i];
    if (clause.literals.empty() || clause.literals.size() > 3)
      violations.push_back("clause " + std::to_string(i + 1) + " has " +
                           std::to_string(clause.literals.size()) +
                           " literals, expected 1 to 3");
    for (std::int32_t literal : clause.literals) {
      std::uint32_t var = static_cast<std::uint32_t>(literal < 0 ? -literal : literal);
      if (literal == 0 || var > formula.variable_count)
        violations.push_back("clause " + std::to_string(i + 1) + " has literal " +
                             std::to_string(literal) + " out of range");
      else
        occurs[var] = true;
    }
  }
  for (std::uint32_t var = 1; var <= formula.variable_count; ++var)
    if (!occurs[var])
      violations.push_back("variable " + std::to_string(var) + " occurs in no clause");
  return violations;
}

bool unsatisfiable(const CnfFormula& formula) {
  const std::uint32_t m = formula.variable_count;
  for (std::uint64_t valuation = 0; valuation < (std::uint64_t{1} << m); ++valuation) {
    bool satisfied = true;
    for (const CnfClause& clause : formula.clauses) {
      bool clause_true = false;
      for (std::int32_t literal : clause.literals) {
        std::uint32_t var = static_cast<std::uint32_t>(literal < 0 ? -literal : literal);
        bool value = (valuation >> (var - 1)) & 1;
        if (literal > 0 ? value : !value) {
          clause_true = true;
          break;
        }
      }
      if (!clause_true) {
        satisfied = false;
        break;
      }
    }
    if (satisfied) return false;
  }
  return true;
}

GameArena gen_from_cnf(const CnfFormula& formula) {
  auto violations = validate(formula);
  if (!violations.empty())
    throw std::invalid_argument("gen_from_cnf: " + violations.front());

  const std::uint32_t m = formula.variable_count;
  const std::uint32_t r = static_cast<std::uint32_t>(formula.clauses.size());
  std::uint32_t literal_total = 0;
  for (const CnfClause& clause : formula.clauses)
    literal_total += static_cast<std::uint32_t>(clause.literals.size());
  const std::uint32_t t = 1 + 2 * m + literal_total;
  if (t > Payoff::kMaxObjectives)
    throw std::invalid_argument("gen_from_cnf: formula needs " + std::to_string(t) +
                                " objectives, at most 64 supported");

  // Vertex layout: 0 = entry; 1 = valuation-cycle head; then per variable
  // the positive literal, negative literal and junction; one such block
  // per clause cycle behind its own head; a dispatch vertex in front.
  const std::uint32_t block = 3 * m + 1;
  const std::uint32_t v1 = 1;
  const std::uint32_t v2 = block + 1;  // the valuation block occupies 1..block
  auto g1_pos = [&](std::uint32_t var) { return v1 + 1 + 3 * (var - 1); };
  auto g1_junction = [&](std::uint32_t var) { return v1 + 3 * var; };
  auto clause_head = [&](std::uint32_t clause) { return v2 + 1 + clause * block; };
  auto clause_pos = [&](std::uint32_t clause, std::uint32_t var) {
    return clause_head(clause) + 1 + 3 * (var - 1);
  };

  const std::uint32_t n = (r + 1) * block + 2;
  GameArena arena;
  arena.owner.assign(n, 1);
  arena.successors.resize(n);
  arena.priorities.assign(n, std::vector<std::uint32_t>(t + 1, 2));
  arena.max_priority.assign(t + 1, 2);
  arena.initial = 0;

  auto add_cycle = [&](std::uint32_t head) {
    arena.successors[head] = {g1_pos(1) - v1 + head, g1_pos(1) - v1 + head + 1};
    for (std::uint32_t var = 1; var <= m; ++var) {
      std::uint32_t pos = g1_pos(var) - v1 + head;
      std::uint32_t neg = pos + 1;
      std::uint32_t junction = g1_junction(var) - v1 + head;
      arena.successors[pos] = {junction};
      arena.successors[neg] = {junction};
      if (var < m)
        arena.successors[junction] = {pos + 3, neg + 3};
      else
        arena.successors[junction] = {head};
    }
  };
  arena.successors[0] = {v1, v2};
  add_cycle(v1);
  arena.successors[v2].reserve(r);
  for (std::uint32_t clause = 0; clause < r; ++clause) {
    arena.successors[v2].push_back(clause_head(clause));
    add_cycle(clause_head(clause));
  }

  // System objective and its twin: satisfied exactly by the clause-side
  // cycles. Both are priority 1 outside them, 2 (the default) inside.
  for (std::uint32_t v = 0; v < v2; ++v)
    arena.priorities[v][0] = arena.priorities[v][1] = 1;

  // Valuation objectives: choosing a literal vertex rules out its
  // opposite, in the valuation cycle and in every clause cycle.
  for (std::uint32_t var = 1; var <= m; ++var) {
    const std::uint32_t pos_objective = 2 * var;
    const std::uint32_t neg_objective = 2 * var + 1;
    auto mark_pair = [&](std::uint32_t pos_vertex) {
      arena.priorities[pos_vertex][neg_objective] = 1;
      arena.priorities[pos_vertex + 1][pos_objective] = 1;
    };
    mark_pair(g1_pos(var));
    for (std::uint32_t clause = 0; clause < r; ++clause) mark_pair(clause_pos(clause, var));
  }

  // One objective per clause literal: in the valuation cycle it tracks the
  // literal's value; on the clause side only the owning clause's head
  // breaks it.
  std::uint32_t objective = 2 * m + 1;
  for (std::uint32_t clause = 0; clause < r; ++clause) {
    for (std::int32_t literal : formula.clauses[clause].literals) {
      ++objective;
      std::uint32_t var = static_cast<std::uint32_t>(literal < 0 ? -literal : literal);
      std::uint32_t opposite = literal > 0 ? g1_pos(var) + 1 : g1_pos(var);
      arena.priorities[opposite][objective] = 1;
      arena.priorities[clause_head(clause)][objective] = 1;
    }
  }
  return arena;
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  std::size_t line_number = 0;
  std::uint32_t declared_clauses = 0;
  bool header_seen = false;
  CnfClause current;

  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (header_seen) throw parse_error(line_number, "duplicate problem line");
      if (!(tokens >> kind >> formula.variable_count >> declared_clauses) || kind != "cnf")
        throw parse_error(line_number, "expected 'p cnf <variables> <clauses>'");
      if (formula.variable_count > 1000000 || declared_clauses > 1000000)
        throw parse_error(line_number, "header sizes out of range");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw parse_error(line_number, "clause before problem line");
    std::istringstream rest(line);
    std::int32_t literal;
    while (rest >> literal) {
      if (literal == 0) {
        formula.clauses.push_back(std::move(current));
        current = {};
      } else {
        current.literals.push_back(literal);
      }
    }
    if (!rest.eof()) throw parse_error(line_number, "malformed literal");
  }
  if (!header_seen) throw parse_error(line_number, "missing problem line");
  if (!current.literals.empty())
    throw parse_error(line_number, "last clause not terminated by 0");
  if (formula.clauses.size() != declared_clauses)
    throw parse_error(line_number, "expected " + std::to_string(declared_clauses) +
                                       " clauses, found " +
                                       std::to_string(formula.clauses.size()));
  auto violations = validate(formula);
  if (!violations.empty()) throw std::invalid_argument("dimacs: " + violations.front());
  return formula;
}

}  // namespace prv
