#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prv/arena.hpp"
#include "prv/lattice.hpp"

namespace prv {

/// A mark names one (objective, priority) pair; a vertex carries the mark
/// (i, p) exactly when its priority for objective i is p, so marks
/// partition the vertices per objective.
struct Mark {
  std::uint32_t objective = 0;
  std::uint32_t priority = 0;

  bool operator==(const Mark&) const = default;
};

/// Dense numbering of an arena's marks, objective-major. Mark ids grow
/// with the declared maxima; there is no fixed cap.
class MarkTable {
 public:
  explicit MarkTable(const GameArena& arena);
  explicit MarkTable(std::vector<std::uint32_t> max_priority);

  std::uint32_t id(std::uint32_t objective, std::uint32_t priority) const;
  Mark decode(std::uint32_t id) const;

  std::uint32_t count() const { return total_; }
  std::uint32_t objective_count() const {  // t
    return static_cast<std::uint32_t>(max_.size()) - 1;
  }
  std::uint32_t max_priority(std::uint32_t objective) const { return max_.at(objective); }

 private:
  std::vector<std::uint32_t> max_;     // d_0 .. d_t
  std::vector<std::uint32_t> offset_;  // objective -> first mark id
  std::uint32_t total_ = 0;
};

/// Mark carried by `vertex` for `objective`.
std::uint32_t vertex_mark(const MarkTable& marks, const GameArena& arena,
                          std::uint32_t vertex, std::uint32_t objective);

/// Marks carried by at least one of the given vertices, as a bitmap over
/// mark ids.
std::vector<bool> present_marks(const MarkTable& marks, const GameArena& arena,
                                std::span<const std::uint32_t> vertices);

/// Positive Boolean combination of Inf(mark)/Fin(mark) atoms. Immutable;
/// construction applies constant folding (True/False absorption and
/// flattening), so constants never appear as proper subterms. No negation
/// node exists.
class AcceptanceFormula {
 public:
  enum class Kind { tt, ff, inf, fin, conj, disj };

  AcceptanceFormula();  // True

  static AcceptanceFormula True();
  static AcceptanceFormula False();
  static AcceptanceFormula inf(std::uint32_t mark);
  static AcceptanceFormula fin(std::uint32_t mark);
  static AcceptanceFormula conj(std::vector<AcceptanceFormula> parts);
  static AcceptanceFormula disj(std::vector<AcceptanceFormula> parts);

  Kind kind() const;
  std::uint32_t mark() const;                           // atoms only
  const std::vector<AcceptanceFormula>& parts() const;  // conj/disj only

  bool is_true() const { return kind() == Kind::tt; }
  bool is_false() const { return kind() == Kind::ff; }

  std::size_t node_count() const;
  bool fin_free() const;
  std::optional<std::uint32_t> lowest_fin_mark() const;
  void collect_marks(std::vector<bool>& marks) const;

  /// Replaces atoms over `mark` by constants; either value may be absent
  /// to keep the corresponding atom.
  AcceptanceFormula assign_mark(std::uint32_t mark, std::optional<bool> inf_value,
                                std::optional<bool> fin_value) const;

  /// Fixes atoms whose mark is absent from `present`: Inf becomes false,
  /// Fin becomes true.
  AcceptanceFormula restrict_to_present(const std::vector<bool>& present) const;

  bool operator==(const AcceptanceFormula& other) const;  // structural

  std::string to_string(const MarkTable& marks) const;

 private:
  struct Node;
  explicit AcceptanceFormula(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

/// Evaluates under Inf(m) = present[m] and Fin(m) = !present[m].
bool eval_on_present(const AcceptanceFormula& f, const std::vector<bool>& present);

/// Evaluates f on a hypothetical inf-set: Inf(m) holds iff some listed
/// vertex carries m.
bool eval_on_inf_set(const AcceptanceFormula& f, const MarkTable& marks,
                     const GameArena& arena, std::span<const std::uint32_t> vertices);

/// Min-even parity unfolding for one objective. With complement set, the
/// formula for the +1-shifted priorities (the opposite parity objective)
/// is produced instead; it is the De Morgan dual of the direct unfolding.
AcceptanceFormula parity_formula(const MarkTable& marks, std::uint32_t objective,
                                 bool complement);

/// Plays whose payoff is exactly p: conjunction over all environment
/// objectives, complemented where p has a 0.
AcceptanceFormula payoff_eq_formula(const MarkTable& marks, const Payoff& p);

/// Plays whose payoff dominates p: conjunction over the satisfied bits only.
AcceptanceFormula payoff_geq_formula(const MarkTable& marks, const Payoff& p);

enum class PayoffMode { eq, geq };

/// Payoff constraint extended with the system objective (complemented for
/// won = false).
AcceptanceFormula extended_formula(const MarkTable& marks, bool won, const Payoff& p,
                                   PayoffMode mode);

/// Plays whose payoff is not strictly below any element of A; with
/// lost_only, additionally restricted to plays lost by the system.
AcceptanceFormula not_strictly_below_formula(const MarkTable& marks, const Antichain& a,
                                             bool lost_only);

/// Streett pair: if F is visited infinitely often then so is E.
struct StreettPair {
  std::vector<std::uint32_t> e;
  std::vector<std::uint32_t> f;
};
using StreettPairs = std::vector<StreettPair>;

struct ParityAtom {
  std::uint32_t objective = 0;
  bool complemented = false;
};

/// Streett encoding of a conjunction of (possibly complemented) parity
/// objectives: for each odd shifted priority o, the pair (vertices with
/// smaller shifted priority, vertices with shifted priority o).
/// Complemented objectives use the +1 shift with the padded maximum.
StreettPairs streett_pairs(const GameArena& arena, std::span<const ParityAtom> atoms);

/// Pairs for the payoff constraint: geq conjoins the objectives satisfied
/// in p; eq additionally conjoins the complements of the others.
StreettPairs conjunction_to_streett(const GameArena& arena, const Payoff& p,
                                    PayoffMode mode = PayoffMode::geq);

/// Whether a vertex set satisfies every pair (as an inf-set).
bool streett_accepts(const StreettPairs& pairs, std::span<const std::uint32_t> vertices);

}  // namespace prv
