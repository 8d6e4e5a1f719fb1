#include "dashed/word.hpp"

#include <algorithm>
#include <functional>

#include "dashed/errors.hpp"

namespace dashed {

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::kBelow:
      return "BELOW";
    case Comparison::kAbove:
      return "ABOVE";
    case Comparison::kEqual:
      return "EQUAL";
    case Comparison::kIncomparable:
      return "INCOMPARABLE";
  }
  return "?";
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1) {
      throw InvariantError("word letter at position " + std::to_string(i + 1) +
                           " is not a positive integer");
    }
  }
}

int Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Block::Block(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InvariantError("block must be nonempty");
  if (letters_.back() < 1) throw InvariantError("block letters must be positive");
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (letters_[i] <= letters_[i + 1]) {
      throw InvariantError("block letters must be strictly decreasing");
    }
  }
}

bool Block::contains(int letter) const {
  return std::binary_search(letters_.begin(), letters_.end(), letter, std::greater<>{});
}

OrderedSetPartition::OrderedSetPartition(BWord blocks) : blocks_(std::move(blocks)) {
  int total = 0;
  int largest = 0;
  for (const Block& b : blocks_) {
    total += static_cast<int>(b.size());
    largest = std::max(largest, b.max());
  }
  if (largest != total) {
    throw InvariantError("blocks do not partition {1.." + std::to_string(total) + "}");
  }
  std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
  for (const Block& b : blocks_) {
    for (int x : b.letters()) {
      if (seen[static_cast<std::size_t>(x)]) {
        throw InvariantError("letter " + std::to_string(x) + " appears in two blocks");
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  n_ = total;
}

Comparison compare_blocks(const Block& d, const Block& d2) {
  if (d.max() < d2.min()) return Comparison::kBelow;
  if (d.min() > d2.max()) return Comparison::kAbove;
  if (d == d2) return Comparison::kEqual;
  return Comparison::kIncomparable;
}

Comparison compare_words(std::span<const int> a, std::span<const int> b) {
  if (std::equal(a.begin(), a.end(), b.begin(), b.end())) return Comparison::kEqual;
  if (a.empty() || b.empty()) return Comparison::kIncomparable;
  const auto [amin, amax] = std::minmax_element(a.begin(), a.end());
  const auto [bmin, bmax] = std::minmax_element(b.begin(), b.end());
  if (*amax < *bmin) return Comparison::kBelow;
  if (*amin > *bmax) return Comparison::kAbove;
  return Comparison::kIncomparable;
}

IndexSet descent_set(const Word& w) {
  return descent_set(std::span<const int>(w.letters()), IntegerOrder{});
}

IndexSet ascent_set(const Word& w) {
  return ascent_set(std::span<const int>(w.letters()), IntegerOrder{});
}

IndexSet descent_set(const BWord& b) {
  return descent_set(std::span<const Block>(b.blocks()), BlockOrder{});
}

IndexSet ascent_set(const BWord& b) {
  return ascent_set(std::span<const Block>(b.blocks()), BlockOrder{});
}

BWord descending_runs(const Word& w) {
  std::vector<Block> runs;
  std::vector<int> current;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!current.empty() && current.back() <= w[i]) {
      runs.emplace_back(std::move(current));
      current.clear();
    }
    current.push_back(w[i]);
  }
  if (!current.empty()) runs.emplace_back(std::move(current));
  return BWord(std::move(runs));
}

Word flatten(const BWord& b) {
  std::vector<int> letters;
  for (const Block& block : b) letters.insert(letters.end(), block.letters().begin(), block.letters().end());
  return Word(std::move(letters));
}

Word reverse(const Word& w) {
  return Word(std::vector<int>(w.letters().rbegin(), w.letters().rend()));
}

BWord reverse(const BWord& b) {
  return BWord(std::vector<Block>(b.blocks().rbegin(), b.blocks().rend()));
}

Word complement(const Word& w, int m) {
  if (m < w.max_letter()) {
    throw InvariantError("complement bound " + std::to_string(m) + " is below the largest letter " +
                         std::to_string(w.max_letter()));
  }
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) out.push_back(m + 1 - x);
  return Word(std::move(out));
}

OrderedSetPartition complement(const OrderedSetPartition& p) {
  const int n = p.n();
  std::vector<Block> blocks;
  blocks.reserve(p.blocks().size());
  for (const Block& b : p.blocks()) {
    std::vector<int> letters;
    letters.reserve(b.size());
    for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) letters.push_back(n + 1 - *it);
    blocks.emplace_back(std::move(letters));
  }
  return OrderedSetPartition(BWord(std::move(blocks)));
}

std::vector<Word> t_factorization(const Word& w, const IndexSet& t) {
  std::vector<Word> out;
  for (auto& seg : t_factorization(std::span<const int>(w.letters()), t)) out.emplace_back(std::move(seg));
  return out;
}

std::vector<BWord> t_factorization(const BWord& b, const IndexSet& t) {
  std::vector<BWord> out;
  for (auto& seg : t_factorization(std::span<const Block>(b.blocks()), t)) out.emplace_back(std::move(seg));
  return out;
}

}  // namespace dashed
