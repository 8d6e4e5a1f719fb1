#include "dashed/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "dashed/errors.hpp"

namespace dashed {

namespace {

int sign(int x) { return (x > 0) - (x < 0); }

bool strictly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] <= v[i + 1]) return false;
  }
  return true;
}

bool strictly_increasing(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] >= v[i + 1]) return false;
  }
  return true;
}

// Flat view of a pattern plus per-block offsets, shared by both matchers.
struct Layout {
  std::vector<int> letters;
  std::vector<int> offsets;
  std::vector<int> lengths;
  std::vector<int> suffix;  // letters in blocks b..end

  explicit Layout(const DashedPattern& p) {
    const auto& blocks = p.blocks();
    suffix.assign(blocks.size() + 1, 0);
    for (const auto& block : blocks) {
      offsets.push_back(static_cast<int>(letters.size()));
      lengths.push_back(static_cast<int>(block.size()));
      letters.insert(letters.end(), block.begin(), block.end());
    }
    for (std::size_t b = blocks.size(); b-- > 0;) suffix[b] = suffix[b + 1] + lengths[b];
  }

  // Host letters at flat indices [from, to) agree in relative order with the
  // host letters already placed at [0, from).
  bool consistent(const std::vector<int>& host, int from, int to) const {
    for (int j = from; j < to; ++j) {
      for (int i = 0; i < from; ++i) {
        if (sign(host[j] - host[i]) != sign(letters[j] - letters[i])) return false;
      }
    }
    return true;
  }
};

// Order-isomorphism of a host segment with a single pattern block.
bool segment_matches(std::span<const int> segment, const std::vector<int>& block) {
  for (std::size_t j = 0; j < segment.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sign(segment[j] - segment[i]) != sign(block[j] - block[i])) return false;
    }
  }
  return true;
}

class WordMatcher {
 public:
  WordMatcher(const DashedPattern& p, const Word& w, std::vector<std::vector<int>>* sink)
      : layout_(p), word_(w.letters()), sink_(sink) {
    const int n = static_cast<int>(word_.size());
    candidates_.resize(p.block_count());
    for (std::size_t b = 0; b < p.block_count(); ++b) {
      const int len = layout_.lengths[b];
      for (int s = 0; s + len <= n; ++s) {
        if (segment_matches(std::span<const int>(word_).subspan(static_cast<std::size_t>(s), static_cast<std::size_t>(len)),
                            p.blocks()[b])) {
          candidates_[b].push_back(s);
        }
      }
    }
    host_.assign(layout_.letters.size(), 0);
    positions_.assign(layout_.letters.size(), 0);
  }

  std::uint64_t run() {
    count_ = 0;
    dfs(0, 0);
    return count_;
  }

 private:
  void dfs(std::size_t b, int min_start) {
    if (b == candidates_.size()) {
      ++count_;
      if (sink_ != nullptr) sink_->push_back(positions_);
      return;
    }
    const int n = static_cast<int>(word_.size());
    const int len = layout_.lengths[b];
    const int off = layout_.offsets[b];
    const int later = layout_.suffix[b + 1];
    auto it = std::lower_bound(candidates_[b].begin(), candidates_[b].end(), min_start);
    for (; it != candidates_[b].end(); ++it) {
      const int s = *it;
      if (s + len + later > n) break;
      for (int j = 0; j < len; ++j) {
        host_[static_cast<std::size_t>(off + j)] = word_[static_cast<std::size_t>(s + j)];
        positions_[static_cast<std::size_t>(off + j)] = s + j + 1;
      }
      if (layout_.consistent(host_, off, off + len)) dfs(b + 1, s + len);
    }
  }

  Layout layout_;
  const std::vector<int>& word_;
  std::vector<std::vector<int>>* sink_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> host_;
  std::vector<int> positions_;
  std::uint64_t count_ = 0;
};

class BWordMatcher {
 public:
  BWordMatcher(const DashedPattern& p, const BWord& bw) : layout_(p), bword_(bw) {
    // Every contiguous segment of a block is strictly decreasing, as is every
    // pattern block, so a segment of the right length is always a candidate.
    host_.assign(layout_.letters.size(), 0);
  }

  std::uint64_t run() {
    count_ = 0;
    dfs(0, 0);
    return count_;
  }

 private:
  void dfs(std::size_t b, std::size_t min_block) {
    if (b == layout_.lengths.size()) {
      ++count_;
      return;
    }
    const std::size_t remaining = layout_.lengths.size() - b;
    const std::size_t len = static_cast<std::size_t>(layout_.lengths[b]);
    const int off = layout_.offsets[b];
    for (std::size_t t = min_block; t + remaining <= bword_.size(); ++t) {
      const auto& letters = bword_[t].letters();
      if (letters.size() < len) continue;
      for (std::size_t s = 0; s + len <= letters.size(); ++s) {
        for (std::size_t j = 0; j < len; ++j) host_[static_cast<std::size_t>(off) + j] = letters[s + j];
        if (layout_.consistent(host_, off, off + static_cast<int>(len))) dfs(b + 1, t + 1);
      }
    }
  }

  Layout layout_;
  const BWord& bword_;
  std::vector<int> host_;
  std::uint64_t count_ = 0;
};

}  // namespace

DashedPattern::DashedPattern(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvariantError("pattern must have at least one block");
  int top = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) throw InvariantError("pattern blocks must be nonempty");
    for (int x : block) {
      if (x < 1) throw InvariantError("pattern letters must be positive");
      top = std::max(top, x);
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(top) + 1, false);
  for (const auto& block : blocks_) {
    for (int x : block) seen[static_cast<std::size_t>(x)] = true;
  }
  for (int v = 1; v <= top; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw InvariantError("pattern letters must cover 1.." + std::to_string(top) + "; " +
                           std::to_string(v) + " is missing");
    }
  }
}

std::vector<int> DashedPattern::type() const {
  std::vector<int> out;
  for (const auto& block : blocks_) out.push_back(static_cast<int>(block.size()));
  return out;
}

int DashedPattern::length() const {
  int m = 0;
  for (const auto& block : blocks_) m += static_cast<int>(block.size());
  return m;
}

int DashedPattern::max_letter() const {
  int top = 0;
  for (const auto& block : blocks_) top = std::max(top, *std::max_element(block.begin(), block.end()));
  return top;
}

std::vector<int> DashedPattern::letters() const {
  std::vector<int> out;
  for (const auto& block : blocks_) out.insert(out.end(), block.begin(), block.end());
  return out;
}

bool DashedPattern::classical() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& b) { return b.size() == 1; });
}

DashedPattern parse_pattern(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  std::size_t block_start = 0;
  std::size_t i = 0;
  auto close_block = [&](std::size_t at) {
    if (current.empty()) throw ParseError("empty pattern block", at);
    blocks.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '-') {
      close_block(block_start);
      ++i;
      block_start = i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > std::numeric_limits<int>::max()) throw ParseError("letter too large", start);
        ++i;
      }
      if (value < 1) throw ParseError("pattern letters must be positive", start);
      current.push_back(static_cast<int>(value));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  close_block(block_start);
  return DashedPattern(std::move(blocks));
}

std::string to_string(const DashedPattern& p) {
  std::ostringstream os;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) os << " - ";
    const auto& block = p.blocks()[b];
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j > 0) os << ' ';
      os << block[j];
    }
  }
  return os.str();
}

PatternClass classify(const DashedPattern& p) {
  PatternClass c;
  const auto& blocks = p.blocks();
  c.piecewise_decreasing = std::all_of(blocks.begin(), blocks.end(), strictly_decreasing);
  c.piecewise_increasing = std::all_of(blocks.begin(), blocks.end(), strictly_increasing);
  c.connected = true;
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    if (comparable_distinct(compare_words(blocks[b], blocks[b + 1]))) {
      c.connected = false;
      break;
    }
  }
  return c;
}

DashedPattern transform_pattern(const DashedPattern& p, PatternTransform which) {
  std::vector<std::vector<int>> blocks = p.blocks();
  switch (which) {
    case PatternTransform::kRev:
      std::reverse(blocks.begin(), blocks.end());
      break;
    case PatternTransform::kRbar:
      for (auto& block : blocks) std::reverse(block.begin(), block.end());
      break;
    case PatternTransform::kComplement: {
      const int top = p.max_letter();
      for (auto& block : blocks) {
        for (int& x : block) x = top + 1 - x;
      }
      break;
    }
  }
  return DashedPattern(std::move(blocks));
}

DashedPattern reverse_pattern(const DashedPattern& p) {
  return transform_pattern(transform_pattern(p, PatternTransform::kRev), PatternTransform::kRbar);
}

std::vector<DashedPattern> symmetry_class(const DashedPattern& p) {
  const DashedPattern c = transform_pattern(p, PatternTransform::kComplement);
  std::set<DashedPattern> members{p, reverse_pattern(p), c, reverse_pattern(c)};
  return {members.begin(), members.end()};
}

std::vector<std::vector<int>> occurrences_in_word(const DashedPattern& p, const Word& w) {
  std::vector<std::vector<int>> out;
  WordMatcher(p, w, &out).run();
  return out;
}

std::uint64_t count_in_word(const DashedPattern& p, const Word& w) {
  return WordMatcher(p, w, nullptr).run();
}

std::uint64_t count_in_bword(const DashedPattern& p, const BWord& b) {
  if (!classify(p).piecewise_decreasing) {
    throw NonDecreasingPattern("pattern " + to_string(p) + " is not piecewise decreasing");
  }
  return BWordMatcher(p, b).run();
}

std::vector<std::uint64_t> multi_stat(std::span<const DashedPattern> ps, const Word& w) {
  std::vector<std::uint64_t> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(count_in_word(p, w));
  return out;
}

std::vector<std::uint64_t> multi_stat(std::span<const DashedPattern> ps, const BWord& b) {
  std::vector<std::uint64_t> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(count_in_bword(p, b));
  return out;
}

}  // namespace dashed
