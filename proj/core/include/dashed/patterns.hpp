#pragma once

// Dashed (vincular) patterns: representation, classification, the REV / RBAR /
// complement transforms, symmetry classes, and occurrence counting in words
// and in block-words.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dashed/word.hpp"

namespace dashed {

// Sequence of nonempty letter blocks separated by dashes. The letters of all
// blocks together cover {1..l} for some l >= 1.
class DashedPattern {
 public:
  explicit DashedPattern(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  // Block lengths (j_1, ..., j_l).
  std::vector<int> type() const;
  // Total number of letters.
  int length() const;
  int max_letter() const;
  // Concatenation of the blocks.
  std::vector<int> letters() const;
  // True when every block has length 1.
  bool classical() const;

  friend bool operator==(const DashedPattern&, const DashedPattern&) = default;
  friend auto operator<=>(const DashedPattern&, const DashedPattern&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

struct PatternClass {
  bool connected = false;
  bool piecewise_decreasing = false;
  bool piecewise_increasing = false;

  friend bool operator==(const PatternClass&, const PatternClass&) = default;
};

enum class PatternTransform {
  kRev,         // reverse the block order
  kRbar,        // reverse the letters inside each block
  kComplement,  // x -> M + 1 - x
};

// Grammar: blocks separated by '-', letters inside a block separated by
// whitespace. Throws ParseError (syntax, with offset) or InvariantError
// (a value in 1..max is missing).
DashedPattern parse_pattern(std::string_view text);
// Canonical rendering: "1 3 - 2".
std::string to_string(const DashedPattern& p);

PatternClass classify(const DashedPattern& p);
DashedPattern transform_pattern(const DashedPattern& p, PatternTransform which);
// Mirror image of the whole dashed word (blocks and their letters reversed).
DashedPattern reverse_pattern(const DashedPattern& p);
// {p, r p, c p, r c p} without duplicates, sorted.
std::vector<DashedPattern> symmetry_class(const DashedPattern& p);

// Occurrences as 1-based position tuples i_1 < ... < i_m.
std::vector<std::vector<int>> occurrences_in_word(const DashedPattern& p, const Word& w);
std::uint64_t count_in_word(const DashedPattern& p, const Word& w);

// Occurrences in the block-word sense: pattern block i is a contiguous
// segment of block t_i, with t_1 < ... < t_l. Requires p piecewise
// decreasing; throws NonDecreasingPattern otherwise.
std::uint64_t count_in_bword(const DashedPattern& p, const BWord& b);

std::vector<std::uint64_t> multi_stat(std::span<const DashedPattern> ps, const Word& w);
std::vector<std::uint64_t> multi_stat(std::span<const DashedPattern> ps, const BWord& b);

}  // namespace dashed
