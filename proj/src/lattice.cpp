#include "prv/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace prv {

namespace {

std::uint64_t all_ones(std::uint32_t size) {
  return size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

}  // namespace

Payoff::Payoff(std::uint32_t size, std::uint64_t bits) : bits_(bits), size_(size) {
  if (size > kMaxObjectives)
    throw std::invalid_argument("payoff: at most 64 objectives supported");
  bits_ &= all_ones(size);
}

Payoff Payoff::bottom(std::uint32_t size) { return Payoff(size, 0); }

Payoff Payoff::top(std::uint32_t size) { return Payoff(size, all_ones(size)); }

bool Payoff::bit(std::uint32_t index) const {
  assert(index < size_);
  return (bits_ >> index) & 1;
}

Payoff Payoff::with_bit(std::uint32_t index, bool value) const {
  assert(index < size_);
  std::uint64_t bits = value ? bits_ | (std::uint64_t{1} << index)
                             : bits_ & ~(std::uint64_t{1} << index);
  return Payoff(size_, bits);
}

std::uint32_t Payoff::count_ones() const {
  return static_cast<std::uint32_t>(std::popcount(bits_));
}

std::string Payoff::to_string() const {
  std::string out = "(";
  for (std::uint32_t i = 0; i < size_; ++i) {
    if (i > 0) out += ',';
    out += bit(i) ? '1' : '0';
  }
  out += ')';
  return out;
}

PayoffCmp compare(const Payoff& p, const Payoff& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("payoff comparison: length mismatch");
  if (p.bits() == q.bits()) return PayoffCmp::equal;
  bool p_le_q = (p.bits() & ~q.bits()) == 0;
  bool q_le_p = (q.bits() & ~p.bits()) == 0;
  if (p_le_q) return PayoffCmp::less;
  if (q_le_p) return PayoffCmp::greater;
  return PayoffCmp::incomparable;
}

bool less_equal(const Payoff& p, const Payoff& q) {
  PayoffCmp c = compare(p, q);
  return c == PayoffCmp::less || c == PayoffCmp::equal;
}

bool strictly_less(const Payoff& p, const Payoff& q) {
  return compare(p, q) == PayoffCmp::less;
}

bool tuple_less(const Payoff& p, const Payoff& q) {
  assert(p.size() == q.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (p.bit(i) != q.bit(i)) return q.bit(i);
  }
  return false;
}

std::vector<Payoff> one_bit_down(const Payoff& p) {
  std::vector<Payoff> out;
  out.reserve(p.count_ones());
  for (std::uint32_t i = 0; i < p.size(); ++i)
    if (p.bit(i)) out.push_back(p.with_bit(i, false));
  return out;
}

std::vector<Payoff> one_bit_up(const Payoff& p) {
  std::vector<Payoff> out;
  out.reserve(p.size() - p.count_ones());
  for (std::uint32_t i = 0; i < p.size(); ++i)
    if (!p.bit(i)) out.push_back(p.with_bit(i, true));
  return out;
}

std::string ExtendedPayoff::to_string() const {
  return (won ? "1," : "0,") + payoff.to_string();
}

bool tuple_less(const ExtendedPayoff& a, const ExtendedPayoff& b) {
  if (a.won != b.won) return b.won;
  return tuple_less(a.payoff, b.payoff);
}

Antichain Antichain::ceil(const std::vector<Payoff>& payoffs) {
  Antichain out;
  for (const Payoff& p : payoffs) out.insert(p);
  return out;
}

bool Antichain::insert(const Payoff& p) {
  for (const Payoff& a : elements_)
    if (less_equal(p, a)) return false;
  std::erase_if(elements_, [&](const Payoff& a) { return strictly_less(a, p); });
  auto pos = std::lower_bound(elements_.begin(), elements_.end(), p,
                              [](const Payoff& a, const Payoff& b) { return tuple_less(a, b); });
  elements_.insert(pos, p);
  return true;
}

bool Antichain::contains(const Payoff& p) const {
  return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

bool Antichain::in_strict_down(const Payoff& p) const {
  for (const Payoff& a : elements_)
    if (strictly_less(p, a)) return true;
  return false;
}

std::string Antichain::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += elements_[i].to_string();
  }
  out += '}';
  return out;
}

AntichainCmp antichain_below(const Antichain& a, const Antichain& b) {
  for (const Payoff& p : a.elements()) {
    bool covered = false;
    for (const Payoff& q : b.elements())
      if (less_equal(p, q)) {
        covered = true;
        break;
      }
    if (!covered) return AntichainCmp::neither;
  }
  return a == b ? AntichainCmp::below_or_equal : AntichainCmp::strictly_below;
}

}  // namespace prv
