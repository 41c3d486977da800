#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prv {

/// Boolean payoff vector over the environment objectives. Bit i (0-based)
/// records whether objective i+1 is satisfied. Immutable value type backed
/// by a machine word; at most 64 objectives.
class Payoff {
 public:
  static constexpr std::uint32_t kMaxObjectives = 64;

  Payoff() = default;
  Payoff(std::uint32_t size, std::uint64_t bits);

  static Payoff bottom(std::uint32_t size);
  static Payoff top(std::uint32_t size);

  std::uint32_t size() const { return size_; }
  std::uint64_t bits() const { return bits_; }
  bool bit(std::uint32_t index) const;
  Payoff with_bit(std::uint32_t index, bool value) const;
  std::uint32_t count_ones() const;

  bool operator==(const Payoff&) const = default;

  std::string to_string() const;  // "(1,0,1,1)"

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t size_ = 0;
};

enum class PayoffCmp { less, equal, greater, incomparable };

/// Componentwise comparison; throws std::invalid_argument on length mismatch.
PayoffCmp compare(const Payoff& p, const Payoff& q);
bool less_equal(const Payoff& p, const Payoff& q);
bool strictly_less(const Payoff& p, const Payoff& q);

/// Total order matching the printed tuple (first objective most
/// significant); used for canonical storage and stable output. Unrelated to
/// the lattice order.
bool tuple_less(const Payoff& p, const Payoff& q);

/// All payoffs obtained by flipping exactly one 1 to 0 (down) or one 0 to 1
/// (up), in ascending bit order.
std::vector<Payoff> one_bit_down(const Payoff& p);
std::vector<Payoff> one_bit_up(const Payoff& p);

struct ExtendedPayoff {
  bool won = false;
  Payoff payoff;

  bool operator==(const ExtendedPayoff&) const = default;
  std::string to_string() const;  // "1,(1,0,1,1)"
};

bool tuple_less(const ExtendedPayoff& a, const ExtendedPayoff& b);

/// Set of pairwise incomparable payoffs. Insertion keeps the invariant
/// eagerly: dominated candidates are rejected and dominated members are
/// dropped, so algorithm loops never observe a non-antichain state.
/// Elements are kept in tuple order.
class Antichain {
 public:
  Antichain() = default;

  /// The maximal elements of an arbitrary payoff set.
  static Antichain ceil(const std::vector<Payoff>& payoffs);

  /// Returns false (and leaves the antichain unchanged) when p is dominated
  /// by a member; otherwise drops members strictly below p and inserts it.
  bool insert(const Payoff& p);

  bool contains(const Payoff& p) const;
  /// Whether p lies strictly below some member, i.e. p is in the strict
  /// downward closure of the antichain.
  bool in_strict_down(const Payoff& p) const;

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Payoff>& elements() const { return elements_; }

  bool operator==(const Antichain&) const = default;

  std::string to_string() const;  // "{(0,1,1),(1,1,0)}"

 private:
  std::vector<Payoff> elements_;
};

enum class AntichainCmp { strictly_below, below_or_equal, neither };

/// Antichain domination: below_or_equal when every member of a is covered
/// by some member of b; strictly_below additionally requires a != b.
AntichainCmp antichain_below(const Antichain& a, const Antichain& b);

}  // namespace prv
