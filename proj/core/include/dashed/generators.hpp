#pragma once

// Exhaustive, deterministic generators for the collections quantified over:
// permutations, l-ary words, compositions with restricted parts, ordered set
// partitions, rearrangement classes of run multisets, and permutations with
// fixed run length.
//
// Every stream exposes `std::optional<value_type> next()` and `reset()`. A
// stream holds only its own cursor, so independent streams may be consumed on
// different threads.

#include <concepts>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dashed/word.hpp"

namespace dashed {

template <class S>
concept Stream = requires(S s) {
  typename S::value_type;
  { s.next() } -> std::same_as<std::optional<typename S::value_type>>;
  s.reset();
};

template <Stream S>
std::vector<typename S::value_type> materialize(S stream) {
  std::vector<typename S::value_type> out;
  while (auto item = stream.next()) out.push_back(std::move(*item));
  return out;
}

template <Stream S, class F>
void for_each(S& stream, F&& fn) {
  while (auto item = stream.next()) fn(*item);
}

// All n! permutations of {1..n} in lexicographic order.
class PermutationStream {
 public:
  using value_type = Word;
  explicit PermutationStream(int n);
  std::optional<Word> next();
  void reset();

 private:
  int n_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

// All l^n words over {1..l} of length n in lexicographic order.
class LWordStream {
 public:
  using value_type = Word;
  LWordStream(int l, int n);
  std::optional<Word> next();
  void reset();

 private:
  int l_;
  int n_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

// Nonempty set of allowed parts.
class PartSet {
 public:
  explicit PartSet(std::set<int> parts);
  PartSet(std::initializer_list<int> parts) : PartSet(std::set<int>(parts)) {}
  const std::vector<int>& parts() const { return parts_; }

 private:
  std::vector<int> parts_;  // ascending
};

struct Composition {
  int n = 0;  // number of parts
  Word parts;
  friend bool operator==(const Composition&, const Composition&) = default;
};

// Compositions of s with parts in A, grouped by length ascending, each group
// in lexicographic order.
class CompositionStream {
 public:
  using value_type = Composition;
  CompositionStream(int s, PartSet parts);
  std::optional<Composition> next();
  void reset();

 private:
  bool feasible(int slots, int remainder) const;
  bool fill_from(std::size_t pos, int remainder);
  bool advance();
  bool start_length(int n);

  int s_;
  PartSet parts_;
  std::vector<std::vector<bool>> feasible_;  // [slots][remainder]
  int length_ = 0;
  std::vector<std::size_t> index_;  // part index per position
  bool pending_ = false;
  bool done_ = false;
};

// Ordered set partitions of {1..n} into k blocks. The enumeration order is
// lexicographic on the block-assignment word (f(1), ..., f(n)) where f(i) is
// the 1-based block containing i. A fixed assignment prefix restricts the
// stream to one chunk, which is how parallel consumers split the work.
class OrderedSetPartitionStream {
 public:
  using value_type = OrderedSetPartition;
  OrderedSetPartitionStream(int n, int k, std::vector<int> prefix = {});
  std::optional<OrderedSetPartition> next();
  void reset();

  // Assignment word of the most recently returned partition.
  const std::vector<int>& assignment() const { return assign_; }
  // All feasible assignment prefixes of the given length, in stream order.
  static std::vector<std::vector<int>> prefixes(int n, int k, int length);

 private:
  bool fill_from(std::size_t pos);
  bool advance();
  OrderedSetPartition build() const;

  int n_;
  int k_;
  std::vector<int> prefix_;
  std::vector<int> assign_;
  std::vector<int> used_;  // block usage counts over assign_
  bool started_ = false;
  bool done_ = false;
};

// Multiset of blocks.
using RunMultiset = std::vector<Block>;

// Distinct orderings of the blocks of M (lexicographic on the block
// sequence); with minimal_only, only those without a block descent.
class RClassStream {
 public:
  using value_type = BWord;
  RClassStream(RunMultiset m, bool minimal_only);
  std::optional<BWord> next();
  void reset();

 private:
  RunMultiset sorted_;
  std::vector<Block> current_;
  bool minimal_only_;
  bool started_ = false;
  bool done_ = false;
};

// Words whose multiset of descending runs is M.
class WordsWithRunsStream {
 public:
  using value_type = Word;
  explicit WordsWithRunsStream(RunMultiset m) : inner_(std::move(m), true) {}
  std::optional<Word> next();
  void reset() { inner_.reset(); }

 private:
  RClassStream inner_;
};

// Permutations of {1..n} all of whose descending runs have length exactly k,
// in lexicographic order. Throws InvariantError unless k >= 1 and k | n.
class FixedRunPermutationStream {
 public:
  using value_type = Word;
  FixedRunPermutationStream(int k, int n);
  std::optional<Word> next();
  void reset();

 private:
  bool allowed(std::size_t depth, int letter) const;
  bool descend();

  int k_;
  int n_;
  std::vector<int> prefix_;
  std::vector<int> next_try_;  // next candidate letter per depth
  std::vector<bool> used_;
  bool started_ = false;
  bool done_ = false;
};

// Convenience wrappers returning fresh streams.
inline PermutationStream permutations(int n) { return PermutationStream(n); }
inline LWordStream lwords(int l, int n) { return LWordStream(l, n); }
inline CompositionStream compositions(int s, PartSet a) { return CompositionStream(s, std::move(a)); }
inline OrderedSetPartitionStream ordered_set_partitions(int n, int k) { return OrderedSetPartitionStream(n, k); }
inline RClassStream r_class(RunMultiset m, bool minimal_only) { return RClassStream(std::move(m), minimal_only); }
inline WordsWithRunsStream words_with_runs(RunMultiset m) { return WordsWithRunsStream(std::move(m)); }
inline FixedRunPermutationStream fixed_run_perms(int k, int n) { return FixedRunPermutationStream(k, n); }

// Stirling numbers of the second kind and ordered Bell numbers, exact.
std::uint64_t stirling2(int n, int k);
std::uint64_t ordered_bell(int n);

}  // namespace dashed
