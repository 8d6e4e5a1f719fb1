#include "dashed/generators.hpp"

#include <algorithm>
#include <numeric>

#include "dashed/errors.hpp"

namespace dashed {

// ---- permutations ---------------------------------------------------------

PermutationStream::PermutationStream(int n) : n_(n) {
  if (n < 0) throw InvariantError("permutation size must be nonnegative");
  reset();
}

void PermutationStream::reset() {
  current_.resize(static_cast<std::size_t>(n_));
  std::iota(current_.begin(), current_.end(), 1);
  started_ = false;
  done_ = false;
}

std::optional<Word> PermutationStream::next() {
  if (done_) return std::nullopt;
  if (started_ && !std::next_permutation(current_.begin(), current_.end())) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return Word(current_);
}

// ---- l-ary words ----------------------------------------------------------

LWordStream::LWordStream(int l, int n) : l_(l), n_(n) {
  if (l < 1) throw InvariantError("alphabet size must be at least 1");
  if (n < 0) throw InvariantError("word length must be nonnegative");
  reset();
}

void LWordStream::reset() {
  current_.assign(static_cast<std::size_t>(n_), 1);
  started_ = false;
  done_ = false;
}

std::optional<Word> LWordStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == l_) {
      current_[i - 1] = 1;
      --i;
    }
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    ++current_[i - 1];
  }
  started_ = true;
  return Word(current_);
}

// ---- compositions ---------------------------------------------------------

PartSet::PartSet(std::set<int> parts) : parts_(parts.begin(), parts.end()) {
  if (parts_.empty()) throw InvariantError("part set must be nonempty");
  if (parts_.front() < 1) throw InvariantError("parts must be positive");
}

CompositionStream::CompositionStream(int s, PartSet parts) : s_(s), parts_(std::move(parts)) {
  if (s < 1) throw InvariantError("composition total must be at least 1");
  const auto slots = static_cast<std::size_t>(s) + 1;
  feasible_.assign(slots, std::vector<bool>(static_cast<std::size_t>(s) + 1, false));
  feasible_[0][0] = true;
  for (std::size_t m = 1; m < slots; ++m) {
    for (int r = 0; r <= s; ++r) {
      for (int p : parts_.parts()) {
        if (p <= r && feasible_[m - 1][static_cast<std::size_t>(r - p)]) {
          feasible_[m][static_cast<std::size_t>(r)] = true;
          break;
        }
      }
    }
  }
  reset();
}

bool CompositionStream::feasible(int slots, int remainder) const {
  if (slots < 0 || remainder < 0) return false;
  return feasible_[static_cast<std::size_t>(slots)][static_cast<std::size_t>(remainder)];
}

bool CompositionStream::fill_from(std::size_t pos, int remainder) {
  const auto& parts = parts_.parts();
  for (std::size_t i = pos; i < index_.size(); ++i) {
    const int slots_after = static_cast<int>(index_.size() - i - 1);
    bool placed = false;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (feasible(slots_after, remainder - parts[j])) {
        index_[i] = j;
        remainder -= parts[j];
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return remainder == 0;
}

bool CompositionStream::start_length(int n) {
  if (!feasible(n, s_)) return false;
  index_.assign(static_cast<std::size_t>(n), 0);
  return fill_from(0, s_);
}

bool CompositionStream::advance() {
  const auto& parts = parts_.parts();
  for (std::size_t pos = index_.size(); pos-- > 0;) {
    int before = 0;
    for (std::size_t i = 0; i < pos; ++i) before += parts[index_[i]];
    const int slots_after = static_cast<int>(index_.size() - pos - 1);
    for (std::size_t j = index_[pos] + 1; j < parts.size(); ++j) {
      const int rem = s_ - before - parts[j];
      if (feasible(slots_after, rem)) {
        index_[pos] = j;
        return fill_from(pos + 1, rem);
      }
    }
  }
  return false;
}

void CompositionStream::reset() {
  length_ = 0;
  done_ = false;
  pending_ = false;
  while (++length_ <= s_) {
    if (start_length(length_)) {
      pending_ = true;
      return;
    }
  }
  done_ = true;
}

std::optional<Composition> CompositionStream::next() {
  if (done_ || !pending_) return std::nullopt;
  std::vector<int> letters;
  letters.reserve(index_.size());
  for (std::size_t j : index_) letters.push_back(parts_.parts()[j]);
  Composition out{length_, Word(std::move(letters))};
  if (!advance()) {
    pending_ = false;
    while (++length_ <= s_) {
      if (start_length(length_)) {
        pending_ = true;
        break;
      }
    }
    if (!pending_) done_ = true;
  }
  return out;
}

// ---- ordered set partitions -----------------------------------------------

namespace {

int missing_blocks(const std::vector<int>& used) {
  int missing = 0;
  for (std::size_t b = 1; b < used.size(); ++b) missing += used[b] == 0 ? 1 : 0;
  return missing;
}

}  // namespace

OrderedSetPartitionStream::OrderedSetPartitionStream(int n, int k, std::vector<int> prefix)
    : n_(n), k_(k), prefix_(std::move(prefix)) {
  if (n < 0 || k < 0) throw InvariantError("partition parameters must be nonnegative");
  if (static_cast<int>(prefix_.size()) > n) throw InvariantError("assignment prefix longer than n");
  for (int v : prefix_) {
    if (v < 1 || v > k) throw InvariantError("assignment prefix value out of range");
  }
  reset();
}

void OrderedSetPartitionStream::reset() {
  assign_ = prefix_;
  used_.assign(static_cast<std::size_t>(k_) + 1, 0);
  for (int v : prefix_) ++used_[static_cast<std::size_t>(v)];
  started_ = false;
  done_ = k_ > n_ || missing_blocks(used_) > n_ - static_cast<int>(prefix_.size());
}

bool OrderedSetPartitionStream::fill_from(std::size_t pos) {
  assign_.resize(pos);
  for (std::size_t i = pos; i < static_cast<std::size_t>(n_); ++i) {
    const int after = n_ - static_cast<int>(i) - 1;
    bool placed = false;
    for (int v = 1; v <= k_; ++v) {
      ++used_[static_cast<std::size_t>(v)];
      if (missing_blocks(used_) <= after) {
        assign_.push_back(v);
        placed = true;
        break;
      }
      --used_[static_cast<std::size_t>(v)];
    }
    if (!placed) return false;
  }
  return true;
}

bool OrderedSetPartitionStream::advance() {
  const std::size_t fixed = prefix_.size();
  while (assign_.size() > fixed) {
    const std::size_t pos = assign_.size() - 1;
    const int old = assign_.back();
    assign_.pop_back();
    --used_[static_cast<std::size_t>(old)];
    const int after = n_ - static_cast<int>(pos) - 1;
    for (int v = old + 1; v <= k_; ++v) {
      ++used_[static_cast<std::size_t>(v)];
      if (missing_blocks(used_) <= after) {
        assign_.push_back(v);
        return fill_from(pos + 1);
      }
      --used_[static_cast<std::size_t>(v)];
    }
  }
  return false;
}

OrderedSetPartition OrderedSetPartitionStream::build() const {
  std::vector<std::vector<int>> letters(static_cast<std::size_t>(k_));
  for (int i = n_; i >= 1; --i) letters[static_cast<std::size_t>(assign_[static_cast<std::size_t>(i - 1)] - 1)].push_back(i);
  std::vector<Block> blocks;
  blocks.reserve(letters.size());
  for (auto& l : letters) blocks.emplace_back(std::move(l));
  return OrderedSetPartition(BWord(std::move(blocks)));
}

std::optional<OrderedSetPartition> OrderedSetPartitionStream::next() {
  if (done_) return std::nullopt;
  const bool ok = started_ ? advance() : fill_from(prefix_.size());
  started_ = true;
  if (!ok) {
    done_ = true;
    return std::nullopt;
  }
  return build();
}

std::vector<std::vector<int>> OrderedSetPartitionStream::prefixes(int n, int k, int length) {
  std::vector<std::vector<int>> out;
  if (k > n || length > n || length < 0) return out;
  std::vector<int> current;
  std::vector<int> used(static_cast<std::size_t>(k) + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      out.push_back(current);
      return;
    }
    const int after = n - static_cast<int>(current.size()) - 1;
    for (int v = 1; v <= k; ++v) {
      ++used[static_cast<std::size_t>(v)];
      if (missing_blocks(used) <= after) {
        current.push_back(v);
        self(self);
        current.pop_back();
      }
      --used[static_cast<std::size_t>(v)];
    }
  };
  rec(rec);
  return out;
}

// ---- rearrangement classes of run multisets -------------------------------

RClassStream::RClassStream(RunMultiset m, bool minimal_only) : sorted_(std::move(m)), minimal_only_(minimal_only) {
  std::sort(sorted_.begin(), sorted_.end());
  reset();
}

void RClassStream::reset() {
  current_ = sorted_;
  started_ = false;
  done_ = false;
}

std::optional<BWord> RClassStream::next() {
  while (!done_) {
    if (started_ && !std::next_permutation(current_.begin(), current_.end())) {
      done_ = true;
      break;
    }
    started_ = true;
    BWord candidate(current_);
    if (!minimal_only_ || descent_set(candidate).empty()) return candidate;
  }
  return std::nullopt;
}

std::optional<Word> WordsWithRunsStream::next() {
  auto b = inner_.next();
  if (!b) return std::nullopt;
  return flatten(*b);
}

// ---- fixed run length permutations -----------------------------------------

FixedRunPermutationStream::FixedRunPermutationStream(int k, int n) : k_(k), n_(n) {
  if (k < 1) throw InvariantError("run length must be at least 1");
  if (n < 0 || n % k != 0) {
    throw InvariantError("run length " + std::to_string(k) + " does not divide " + std::to_string(n));
  }
  reset();
}

void FixedRunPermutationStream::reset() {
  prefix_.clear();
  next_try_.assign(static_cast<std::size_t>(n_) + 1, 1);
  used_.assign(static_cast<std::size_t>(n_) + 1, false);
  started_ = false;
  done_ = false;
}

bool FixedRunPermutationStream::allowed(std::size_t depth, int letter) const {
  if (used_[static_cast<std::size_t>(letter)]) return false;
  if (depth == 0) return true;
  const int prev = prefix_[depth - 1];
  // Inside a run letters decrease; a new run starts with an ascent.
  return depth % static_cast<std::size_t>(k_) != 0 ? letter < prev : letter > prev;
}

bool FixedRunPermutationStream::descend() {
  while (true) {
    const std::size_t d = prefix_.size();
    if (d == static_cast<std::size_t>(n_)) return true;
    bool pushed = false;
    for (int x = next_try_[d]; x <= n_; ++x) {
      if (allowed(d, x)) {
        prefix_.push_back(x);
        used_[static_cast<std::size_t>(x)] = true;
        next_try_[d] = x + 1;
        next_try_[d + 1] = 1;
        pushed = true;
        break;
      }
    }
    if (pushed) continue;
    if (d == 0) return false;
    used_[static_cast<std::size_t>(prefix_.back())] = false;
    prefix_.pop_back();
  }
}

std::optional<Word> FixedRunPermutationStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    if (prefix_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    used_[static_cast<std::size_t>(prefix_.back())] = false;
    prefix_.pop_back();
  }
  started_ = true;
  if (!descend()) {
    done_ = true;
    return std::nullopt;
  }
  return Word(prefix_);
}

// ---- counting --------------------------------------------------------------

std::uint64_t stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) {
      std::uint64_t term = 0;
      std::uint64_t out = 0;
      if (__builtin_mul_overflow(j, s[i - 1][j], &term) || __builtin_add_overflow(term, s[i - 1][j - 1], &out)) {
        throw OverflowError("Stirling number overflow");
      }
      s[i][j] = out;
    }
  }
  return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t ordered_bell(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    std::uint64_t fact = 1;
    for (int j = 2; j <= k; ++j) {
      if (__builtin_mul_overflow(fact, static_cast<std::uint64_t>(j), &fact)) throw OverflowError("factorial overflow");
    }
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(fact, stirling2(n, k), &term) || __builtin_add_overflow(total, term, &total)) {
      throw OverflowError("ordered Bell number overflow");
    }
  }
  return total;
}

}  // namespace dashed
