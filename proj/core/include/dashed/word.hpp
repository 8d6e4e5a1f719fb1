#pragma once

// Words over the positive integers, blocks (decreasing words), block-words,
// ordered set partitions, and the elementary machinery shared by every other
// module: the block order, descent/ascent sets, runs, reverse, complement and
// T-factorizations.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dashed/index_set.hpp"

namespace dashed {

enum class Comparison { kBelow, kAbove, kEqual, kIncomparable };

const char* to_string(Comparison c);

inline bool comparable_distinct(Comparison c) {
  return c == Comparison::kBelow || c == Comparison::kAbove;
}

// Finite sequence of positive integers.
class Word {
 public:
  using value_type = int;

  Word() = default;
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  // 0 for the empty word.
  int max_letter() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

// Nonempty strictly decreasing word; equivalently a finite nonempty set.
class Block {
 public:
  explicit Block(std::vector<int> letters);
  Block(std::initializer_list<int> letters) : Block(std::vector<int>(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int max() const { return letters_.front(); }
  int min() const { return letters_.back(); }
  bool contains(int letter) const;

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;

 private:
  std::vector<int> letters_;
};

// Finite sequence of blocks.
class BWord {
 public:
  using value_type = Block;

  BWord() = default;
  explicit BWord(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}
  BWord(std::initializer_list<Block> blocks) : blocks_(blocks) {}

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  const Block& operator[](std::size_t i) const { return blocks_[i]; }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  friend bool operator==(const BWord&, const BWord&) = default;
  friend auto operator<=>(const BWord&, const BWord&) = default;

 private:
  std::vector<Block> blocks_;
};

// Sequence of pairwise disjoint nonempty blocks whose union is {1..n}.
class OrderedSetPartition {
 public:
  explicit OrderedSetPartition(BWord blocks);

  const BWord& bword() const { return blocks_; }
  const std::vector<Block>& blocks() const { return blocks_.blocks(); }
  int n() const { return n_; }
  int k() const { return static_cast<int>(blocks_.size()); }

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
  friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  BWord blocks_;
  int n_ = 0;
};

// Orders used as poset oracles by the monoid and bijection templates.
struct IntegerOrder {
  Comparison operator()(int a, int b) const {
    if (a == b) return Comparison::kEqual;
    return a < b ? Comparison::kBelow : Comparison::kAbove;
  }
};

Comparison compare_blocks(const Block& d, const Block& d2);

struct BlockOrder {
  Comparison operator()(const Block& a, const Block& b) const { return compare_blocks(a, b); }
};

// Word-level extension of the block order: compares arbitrary nonempty
// integer sequences by their extreme letters.
Comparison compare_words(std::span<const int> a, std::span<const int> b);

template <class E, class Order>
IndexSet descent_set(std::span<const E> seq, Order order) {
  IndexSet out;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (order(seq[i], seq[i + 1]) == Comparison::kAbove) out.insert(static_cast<int>(i + 1));
  }
  return out;
}

template <class E, class Order>
IndexSet ascent_set(std::span<const E> seq, Order order) {
  IndexSet out;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (order(seq[i], seq[i + 1]) == Comparison::kBelow) out.insert(static_cast<int>(i + 1));
  }
  return out;
}

IndexSet descent_set(const Word& w);
IndexSet ascent_set(const Word& w);
IndexSet descent_set(const BWord& b);
IndexSet ascent_set(const BWord& b);

BWord descending_runs(const Word& w);
Word flatten(const BWord& b);

Word reverse(const Word& w);
BWord reverse(const BWord& b);

// Letterwise x -> m + 1 - x. Throws InvariantError when m < max letter.
Word complement(const Word& w, int m);
// Complement on {1..n}; blocks are re-sorted into decreasing order.
OrderedSetPartition complement(const OrderedSetPartition& p);

// Splits seq so that position i (1-based) ends a segment iff i is not in t
// or i = len. Throws std::out_of_range if t has members outside [1, len-1].
template <class E>
std::vector<std::vector<E>> t_factorization(std::span<const E> seq, const IndexSet& t) {
  if (t.max() >= static_cast<int>(seq.size()) && !t.empty()) {
    throw std::out_of_range("T-factorization index beyond sequence length");
  }
  std::vector<std::vector<E>> segments;
  std::vector<E> current;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    current.push_back(seq[i]);
    const int pos = static_cast<int>(i + 1);
    if (!t.contains(pos) || i + 1 == seq.size()) {
      segments.push_back(std::move(current));
      current.clear();
    }
  }
  return segments;
}

std::vector<Word> t_factorization(const Word& w, const IndexSet& t);
std::vector<BWord> t_factorization(const BWord& b, const IndexSet& t);

// Textual forms: "3 5 4 1" for words, "8 5 | 1 | 9 6 2" for block-words.
Word parse_word(std::string_view text);
BWord parse_bword(std::string_view text);
OrderedSetPartition parse_partition(std::string_view text);

std::string to_string(const Word& w);
std::string to_string(const Block& b);
std::string to_string(const BWord& b);
std::string to_string(const OrderedSetPartition& p);

}  // namespace dashed
