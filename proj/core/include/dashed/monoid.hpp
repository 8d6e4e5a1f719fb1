#pragma once

// Partially commutative monoid L(X, <=) over an arbitrary poset oracle.
//
// Two words are adjacent when they differ by swapping one neighbouring pair
// of distinct comparable letters; equivalence classes are the connected
// components of that relation. Everything here is templated on the element
// type E and an oracle `Comparison order(const E&, const E&)`. BlockOrder and
// IntegerOrder from word.hpp are the two instances used in practice.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dashed/errors.hpp"
#include "dashed/word.hpp"

namespace dashed {

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

template <class E>
struct EquivClass {
  std::vector<E> generator;
  std::vector<std::vector<E>> members;  // sorted, contains generator

  std::size_t size() const { return members.size(); }
  bool contains(const std::vector<E>& w) const {
    return std::binary_search(members.begin(), members.end(), w);
  }
};

enum class Extremal { kMinimal, kMaximal };
enum class SetStat { kDes, kAsc };

using SetDistribution = std::map<IndexSet, std::uint64_t>;

template <class E, class Order>
IndexSet set_stat(std::span<const E> w, SetStat which, Order order) {
  return which == SetStat::kDes ? descent_set(w, order) : ascent_set(w, order);
}

template <class E, class Order>
std::vector<std::vector<E>> adjacent_words(std::span<const E> w, Order order) {
  std::vector<std::vector<E>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (comparable_distinct(order(w[i], w[i + 1]))) {
      std::vector<E> swapped(w.begin(), w.end());
      std::swap(swapped[i], swapped[i + 1]);
      out.push_back(std::move(swapped));
    }
  }
  return out;
}

// Breadth-first closure of w under adjacency. Throws ClassTooLarge when the
// class would exceed `cap` members.
template <class E, class Order>
EquivClass<E> equivalence_class(std::span<const E> w, Order order, std::size_t cap = kDefaultClassCap) {
  std::set<std::vector<E>> seen;
  std::deque<std::vector<E>> frontier;
  std::vector<E> start(w.begin(), w.end());
  seen.insert(start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    std::vector<E> current = std::move(frontier.front());
    frontier.pop_front();
    for (auto& neighbour : adjacent_words(std::span<const E>(current), order)) {
      if (seen.insert(neighbour).second) {
        if (seen.size() > cap) {
          throw ClassTooLarge("equivalence class exceeds cap of " + std::to_string(cap) + " members");
        }
        frontier.push_back(std::move(neighbour));
      }
    }
  }
  return EquivClass<E>{std::move(start), std::vector<std::vector<E>>(seen.begin(), seen.end())};
}

// The unique member with empty descent set (minimal) or empty ascent set
// (maximal). NotFound / NotUnique mean the oracle is not a partial order.
template <class E, class Order>
const std::vector<E>& extremal_word(const EquivClass<E>& c, Extremal which, Order order) {
  const std::vector<E>* found = nullptr;
  const SetStat stat = which == Extremal::kMinimal ? SetStat::kDes : SetStat::kAsc;
  for (const auto& member : c.members) {
    if (set_stat(std::span<const E>(member), stat, order).empty()) {
      if (found != nullptr) throw NotUnique("class has more than one extremal word");
      found = &member;
    }
  }
  if (found == nullptr) throw NotFound("class has no extremal word");
  return *found;
}

template <class E, class Order>
SetDistribution setstat_distribution(const EquivClass<E>& c, SetStat which, Order order) {
  SetDistribution out;
  for (const auto& member : c.members) ++out[set_stat(std::span<const E>(member), which, order)];
  return out;
}

// Number of members whose descent (or ascent) set lies inside t.
template <class E, class Order>
std::uint64_t subset_count(const EquivClass<E>& c, const IndexSet& t, SetStat which, Order order) {
  std::uint64_t count = 0;
  for (const auto& member : c.members) {
    if (set_stat(std::span<const E>(member), which, order).is_subset_of(t)) ++count;
  }
  return count;
}

// Recovers f_=(S) from the subset counts by inclusion-exclusion:
// f_=(S) = sum_{T subset of S} (-1)^{|S|-|T|} f_subset(T).
template <class E, class Order>
std::int64_t exact_count_by_inclusion_exclusion(const EquivClass<E>& c, const IndexSet& s, SetStat which,
                                                 Order order) {
  std::int64_t total = 0;
  const std::uint64_t mask = s.mask();
  // Enumerate every submask of s, including s itself and the empty set.
  for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
    const IndexSet t = IndexSet::from_mask(sub);
    const auto term = static_cast<std::int64_t>(subset_count(c, t, which, order));
    total += ((s.size() - t.size()) % 2 == 0) ? term : -term;
    if (sub == 0) break;
  }
  return total;
}

struct OracleReport {
  bool valid = true;
  std::string problem;
};

// Checks on a finite support that the oracle is a partial order: EQUAL only
// on identical elements, BELOW/ABOVE converse, and BELOW transitive.
template <class E, class Order>
OracleReport validate_oracle(std::span<const E> support, Order order) {
  for (const E& a : support) {
    if (order(a, a) != Comparison::kEqual) return {false, "element not equal to itself"};
    for (const E& b : support) {
      const Comparison ab = order(a, b);
      const Comparison ba = order(b, a);
      if ((ab == Comparison::kEqual) != (a == b)) return {false, "EQUAL on distinct elements"};
      if ((ab == Comparison::kBelow) != (ba == Comparison::kAbove)) return {false, "BELOW/ABOVE not converse"};
      if ((ab == Comparison::kIncomparable) != (ba == Comparison::kIncomparable)) {
        return {false, "incomparability not symmetric"};
      }
      if (ab != Comparison::kBelow) continue;
      for (const E& c : support) {
        if (order(b, c) == Comparison::kBelow && order(a, c) != Comparison::kBelow) {
          return {false, "BELOW not transitive"};
        }
      }
    }
  }
  return {};
}

}  // namespace dashed
