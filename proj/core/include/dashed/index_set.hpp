#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dashed {

// Finite set of positive integers in [1, kMaxIndex], stored as a bitmask.
// Used for descent/ascent sets (positions are 1-based) as well as for
// opener/closer sets of ordered set partitions.
class IndexSet {
 public:
  static constexpr int kMaxIndex = 63;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> members);
  explicit IndexSet(const std::vector<int>& members);

  static IndexSet from_mask(std::uint64_t mask);
  // All integers in [lo, hi]; empty when hi < lo.
  static IndexSet interval(int lo, int hi);

  void insert(int i);
  void erase(int i);
  void toggle(int i);
  bool contains(int i) const;

  int size() const;
  bool empty() const { return mask_ == 0; }
  // Largest member; 0 when empty.
  int max() const;
  std::int64_t sum() const;
  std::uint64_t mask() const { return mask_; }

  bool is_subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> to_vector() const;
  // "{1,4}" style rendering.
  std::string to_string() const;

  friend IndexSet operator|(IndexSet a, IndexSet b) { return from_mask(a.mask_ | b.mask_); }
  friend IndexSet operator&(IndexSet a, IndexSet b) { return from_mask(a.mask_ & b.mask_); }
  friend IndexSet operator-(IndexSet a, IndexSet b) { return from_mask(a.mask_ & ~b.mask_); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  // Lexicographic on the sorted member lists, so {} < {1} < {1,2} < {2}.
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace dashed
