#include "prv/acceptance.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace prv {

MarkTable::MarkTable(const GameArena& arena) : MarkTable(arena.max_priority) {}

MarkTable::MarkTable(std::vector<std::uint32_t> max_priority) : max_(std::move(max_priority)) {
  if (max_.empty()) throw std::invalid_argument("mark table: no objectives");
  offset_.reserve(max_.size());
  for (std::uint32_t d : max_) {
    offset_.push_back(total_);
    total_ += d + 1;
  }
}

std::uint32_t MarkTable::id(std::uint32_t objective, std::uint32_t priority) const {
  assert(objective < max_.size() && priority <= max_[objective]);
  return offset_[objective] + priority;
}

Mark MarkTable::decode(std::uint32_t id) const {
  assert(id < total_);
  auto it = std::upper_bound(offset_.begin(), offset_.end(), id);
  std::uint32_t objective = static_cast<std::uint32_t>(it - offset_.begin()) - 1;
  return Mark{objective, id - offset_[objective]};
}

std::uint32_t vertex_mark(const MarkTable& marks, const GameArena& arena,
                          std::uint32_t vertex, std::uint32_t objective) {
  return marks.id(objective, arena.priorities[vertex][objective]);
}

std::vector<bool> present_marks(const MarkTable& marks, const GameArena& arena,
                                std::span<const std::uint32_t> vertices) {
  std::vector<bool> present(marks.count(), false);
  const std::uint32_t objectives = marks.objective_count() + 1;
  for (std::uint32_t v : vertices)
    for (std::uint32_t i = 0; i < objectives; ++i)
      present[vertex_mark(marks, arena, v, i)] = true;
  return present;
}

// ---------------------------------------------------------------------------
// AcceptanceFormula

struct AcceptanceFormula::Node {
  Kind kind;
  std::uint32_t mark = 0;
  std::vector<AcceptanceFormula> parts;
};

AcceptanceFormula::AcceptanceFormula() : node_(True().node_) {}

AcceptanceFormula::AcceptanceFormula(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

AcceptanceFormula AcceptanceFormula::True() {
  static const auto node = std::make_shared<const Node>(Node{Kind::tt, 0, {}});
  return AcceptanceFormula(node);
}

AcceptanceFormula AcceptanceFormula::False() {
  static const auto node = std::make_shared<const Node>(Node{Kind::ff, 0, {}});
  return AcceptanceFormula(node);
}

AcceptanceFormula AcceptanceFormula::inf(std::uint32_t mark) {
  return AcceptanceFormula(std::make_shared<const Node>(Node{Kind::inf, mark, {}}));
}

AcceptanceFormula AcceptanceFormula::fin(std::uint32_t mark) {
  return AcceptanceFormula(std::make_shared<const Node>(Node{Kind::fin, mark, {}}));
}

AcceptanceFormula AcceptanceFormula::conj(std::vector<AcceptanceFormula> parts) {
  std::vector<AcceptanceFormula> kept;
  for (auto& part : parts) {
    if (part.is_false()) return False();
    if (part.is_true()) continue;
    if (part.kind() == Kind::conj) {
      for (const auto& sub : part.parts()) kept.push_back(sub);
    } else {
      kept.push_back(std::move(part));
    }
  }
  if (kept.empty()) return True();
  if (kept.size() == 1) return kept.front();
  return AcceptanceFormula(
      std::make_shared<const Node>(Node{Kind::conj, 0, std::move(kept)}));
}

AcceptanceFormula AcceptanceFormula::disj(std::vector<AcceptanceFormula> parts) {
  std::vector<AcceptanceFormula> kept;
  for (auto& part : parts) {
    if (part.is_true()) return True();
    if (part.is_false()) continue;
    if (part.kind() == Kind::disj) {
      for (const auto& sub : part.parts()) kept.push_back(sub);
    } else {
      kept.push_back(std::move(part));
    }
  }
  if (kept.empty()) return False();
  if (kept.size() == 1) return kept.front();
  return AcceptanceFormula(
      std::make_shared<const Node>(Node{Kind::disj, 0, std::move(kept)}));
}

AcceptanceFormula::Kind AcceptanceFormula::kind() const { return node_->kind; }

std::uint32_t AcceptanceFormula::mark() const {
  assert(kind() == Kind::inf || kind() == Kind::fin);
  return node_->mark;
}

const std::vector<AcceptanceFormula>& AcceptanceFormula::parts() const {
  return node_->parts;
}

std::size_t AcceptanceFormula::node_count() const {
  std::size_t count = 1;
  for (const auto& part : node_->parts) count += part.node_count();
  return count;
}

bool AcceptanceFormula::fin_free() const {
  switch (kind()) {
    case Kind::fin:
      return false;
    case Kind::conj:
    case Kind::disj:
      return std::all_of(node_->parts.begin(), node_->parts.end(),
                         [](const AcceptanceFormula& f) { return f.fin_free(); });
    default:
      return true;
  }
}

std::optional<std::uint32_t> AcceptanceFormula::lowest_fin_mark() const {
  switch (kind()) {
    case Kind::fin:
      return node_->mark;
    case Kind::conj:
    case Kind::disj: {
      std::optional<std::uint32_t> best;
      for (const auto& part : node_->parts)
        if (auto m = part.lowest_fin_mark(); m && (!best || *m < *best)) best = m;
      return best;
    }
    default:
      return std::nullopt;
  }
}

void AcceptanceFormula::collect_marks(std::vector<bool>& marks) const {
  switch (kind()) {
    case Kind::inf:
    case Kind::fin:
      if (node_->mark >= marks.size()) marks.resize(node_->mark + 1, false);
      marks[node_->mark] = true;
      break;
    case Kind::conj:
    case Kind::disj:
      for (const auto& part : node_->parts) part.collect_marks(marks);
      break;
    default:
      break;
  }
}

AcceptanceFormula AcceptanceFormula::assign_mark(std::uint32_t mark,
                                                 std::optional<bool> inf_value,
                                                 std::optional<bool> fin_value) const {
  switch (kind()) {
    case Kind::inf:
      if (node_->mark == mark && inf_value)
        return *inf_value ? True() : False();
      return *this;
    case Kind::fin:
      if (node_->mark == mark && fin_value)
        return *fin_value ? True() : False();
      return *this;
    case Kind::conj:
    case Kind::disj: {
      std::vector<AcceptanceFormula> rebuilt;
      rebuilt.reserve(node_->parts.size());
      for (const auto& part : node_->parts)
        rebuilt.push_back(part.assign_mark(mark, inf_value, fin_value));
      return kind() == Kind::conj ? conj(std::move(rebuilt)) : disj(std::move(rebuilt));
    }
    default:
      return *this;
  }
}

AcceptanceFormula AcceptanceFormula::restrict_to_present(
    const std::vector<bool>& present) const {
  switch (kind()) {
    case Kind::inf:
      return present[node_->mark] ? *this : False();
    case Kind::fin:
      return present[node_->mark] ? *this : True();
    case Kind::conj:
    case Kind::disj: {
      std::vector<AcceptanceFormula> rebuilt;
      rebuilt.reserve(node_->parts.size());
      for (const auto& part : node_->parts)
        rebuilt.push_back(part.restrict_to_present(present));
      return kind() == Kind::conj ? conj(std::move(rebuilt)) : disj(std::move(rebuilt));
    }
    default:
      return *this;
  }
}

bool AcceptanceFormula::operator==(const AcceptanceFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::inf:
    case Kind::fin:
      return node_->mark == other.node_->mark;
    case Kind::conj:
    case Kind::disj:
      return node_->parts == other.node_->parts;
    default:
      return true;
  }
}

std::string AcceptanceFormula::to_string(const MarkTable& marks) const {
  switch (kind()) {
    case Kind::tt:
      return "t";
    case Kind::ff:
      return "f";
    case Kind::inf:
    case Kind::fin: {
      Mark m = marks.decode(node_->mark);
      return std::string(kind() == Kind::inf ? "Inf(" : "Fin(") +
             std::to_string(m.objective) + ':' + std::to_string(m.priority) + ')';
    }
    case Kind::conj:
    case Kind::disj: {
      const char* op = kind() == Kind::conj ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < node_->parts.size(); ++i) {
        if (i > 0) out += op;
        out += node_->parts[i].to_string(marks);
      }
      out += ')';
      return out;
    }
  }
  return {};
}

bool eval_on_present(const AcceptanceFormula& f, const std::vector<bool>& present) {
  switch (f.kind()) {
    case AcceptanceFormula::Kind::tt:
      return true;
    case AcceptanceFormula::Kind::ff:
      return false;
    case AcceptanceFormula::Kind::inf:
      return present[f.mark()];
    case AcceptanceFormula::Kind::fin:
      return !present[f.mark()];
    case AcceptanceFormula::Kind::conj:
      return std::all_of(f.parts().begin(), f.parts().end(),
                         [&](const AcceptanceFormula& p) { return eval_on_present(p, present); });
    case AcceptanceFormula::Kind::disj:
      return std::any_of(f.parts().begin(), f.parts().end(),
                         [&](const AcceptanceFormula& p) { return eval_on_present(p, present); });
  }
  return false;
}

bool eval_on_inf_set(const AcceptanceFormula& f, const MarkTable& marks,
                     const GameArena& arena, std::span<const std::uint32_t> vertices) {
  return eval_on_present(f, present_marks(marks, arena, vertices));
}

// ---------------------------------------------------------------------------
// Formula builders

AcceptanceFormula parity_formula(const MarkTable& marks, std::uint32_t objective,
                                 bool complement) {
  const std::uint32_t d = marks.max_priority(objective);
  assert(d % 2 == 0 && "maxima must be padded to even before building formulas");
  // Min-even unfolding Inf(0) | (Fin(1) & (Inf(2) | ...)), built from the
  // highest priority down. The complement is its De Morgan dual, which is
  // exactly the unfolding for the +1-shifted priority function.
  AcceptanceFormula acc = complement ? AcceptanceFormula::fin(marks.id(objective, d))
                                     : AcceptanceFormula::inf(marks.id(objective, d));
  for (std::uint32_t p = d; p-- > 0;) {
    std::uint32_t mark = marks.id(objective, p);
    bool odd = p % 2 != 0;
    if (odd != complement)
      acc = AcceptanceFormula::conj({AcceptanceFormula::fin(mark), std::move(acc)});
    else
      acc = AcceptanceFormula::disj({AcceptanceFormula::inf(mark), std::move(acc)});
  }
  return acc;
}

AcceptanceFormula payoff_eq_formula(const MarkTable& marks, const Payoff& p) {
  std::vector<AcceptanceFormula> parts;
  parts.reserve(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i)
    parts.push_back(parity_formula(marks, i + 1, !p.bit(i)));
  return AcceptanceFormula::conj(std::move(parts));
}

AcceptanceFormula payoff_geq_formula(const MarkTable& marks, const Payoff& p) {
  std::vector<AcceptanceFormula> parts;
  for (std::uint32_t i = 0; i < p.size(); ++i)
    if (p.bit(i)) parts.push_back(parity_formula(marks, i + 1, false));
  return AcceptanceFormula::conj(std::move(parts));
}

AcceptanceFormula extended_formula(const MarkTable& marks, bool won, const Payoff& p,
                                   PayoffMode mode) {
  AcceptanceFormula payoff_part =
      mode == PayoffMode::eq ? payoff_eq_formula(marks, p) : payoff_geq_formula(marks, p);
  return AcceptanceFormula::conj(
      {parity_formula(marks, 0, !won), std::move(payoff_part)});
}

AcceptanceFormula not_strictly_below_formula(const MarkTable& marks, const Antichain& a,
                                             bool lost_only) {
  std::vector<AcceptanceFormula> parts;
  if (lost_only) parts.push_back(parity_formula(marks, 0, true));
  for (const Payoff& p : a.elements()) {
    // Not strictly below p: dominate p, or beat it on some unsatisfied bit.
    std::vector<AcceptanceFormula> all_ones;
    std::vector<AcceptanceFormula> any_zero;
    for (std::uint32_t i = 0; i < p.size(); ++i) {
      if (p.bit(i))
        all_ones.push_back(parity_formula(marks, i + 1, false));
      else
        any_zero.push_back(parity_formula(marks, i + 1, false));
    }
    parts.push_back(AcceptanceFormula::disj(
        {AcceptanceFormula::conj(std::move(all_ones)),
         AcceptanceFormula::disj(std::move(any_zero))}));
  }
  return AcceptanceFormula::conj(std::move(parts));
}

// ---------------------------------------------------------------------------
// Streett encoding

StreettPairs streett_pairs(const GameArena& arena, std::span<const ParityAtom> atoms) {
  StreettPairs pairs;
  for (const ParityAtom& atom : atoms) {
    const std::uint32_t shift = atom.complemented ? 1 : 0;
    // Shifted maximum, padded up to even.
    std::uint32_t top = arena.max_priority[atom.objective] + shift;
    if (top % 2 != 0) ++top;
    for (std::uint32_t o = 1; o <= top; o += 2) {
      StreettPair pair;
      for (std::uint32_t v = 0; v < arena.vertex_count(); ++v) {
        std::uint32_t shifted = arena.priorities[v][atom.objective] + shift;
        if (shifted < o) pair.e.push_back(v);
        if (shifted == o) pair.f.push_back(v);
      }
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

StreettPairs conjunction_to_streett(const GameArena& arena, const Payoff& p,
                                    PayoffMode mode) {
  std::vector<ParityAtom> atoms;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (p.bit(i))
      atoms.push_back({i + 1, false});
    else if (mode == PayoffMode::eq)
      atoms.push_back({i + 1, true});
  }
  return streett_pairs(arena, atoms);
}

bool streett_accepts(const StreettPairs& pairs, std::span<const std::uint32_t> vertices) {
  auto intersects = [&](const std::vector<std::uint32_t>& set) {
    for (std::uint32_t v : vertices)
      if (std::binary_search(set.begin(), set.end(), v)) return true;
    return false;
  };
  for (const StreettPair& pair : pairs)
    if (intersects(pair.f) && !intersects(pair.e)) return false;
  return true;
}

}  // namespace prv
