#include "dashed/bijections.hpp"

#include <algorithm>
#include <string>

namespace dashed {

namespace {

std::span<const Block> view(const BWord& b) { return b.blocks(); }
std::span<const int> view(const Word& w) { return w.letters(); }

int resolve_alphabet(const Word& w, int r) {
  if (r == 0) return std::max(w.max_letter(), 1);
  if (r < 1) throw AlphabetViolation("alphabet size must be positive, got " + std::to_string(r));
  if (w.max_letter() > r) {
    throw AlphabetViolation("letter " + std::to_string(w.max_letter()) + " exceeds alphabet {1.." +
                            std::to_string(r) + "}");
  }
  return r;
}

}  // namespace

BWord theta(const BWord& b) { return BWord(theta(view(b), BlockOrder{})); }
Word theta(const Word& w) { return Word(theta(view(w), IntegerOrder{})); }

BWord gamma(const BWord& b, GammaTrace<Block>* trace) { return BWord(gamma(view(b), BlockOrder{}, trace)); }
Word gamma(const Word& w, GammaTrace<int>* trace) { return Word(gamma(view(w), IntegerOrder{}, trace)); }

BWord gamma_inverse(const BWord& b, GammaTrace<Block>* trace) {
  return BWord(gamma_inverse(view(b), BlockOrder{}, trace));
}
Word gamma_inverse(const Word& w, GammaTrace<int>* trace) {
  return Word(gamma_inverse(view(w), IntegerOrder{}, trace));
}

EquivClass<Block> equivalence_class(const BWord& b, std::size_t cap) {
  return equivalence_class(view(b), BlockOrder{}, cap);
}
EquivClass<int> equivalence_class(const Word& w, std::size_t cap) {
  return equivalence_class(view(w), IntegerOrder{}, cap);
}

Word epsilon(const Word& w, EpsilonTrace* trace) {
  BWord runs = descending_runs(w);
  BWord maximal = theta(runs);
  BWord reversed = reverse(maximal);
  Word out = flatten(reversed);
  if (trace != nullptr) *trace = {std::move(runs), std::move(maximal), std::move(reversed)};
  return out;
}

Word gamma_i(const Word& w, int i, int r) {
  r = resolve_alphabet(w, r);
  if (i < 1 || i >= r) {
    throw AlphabetViolation("gamma_i needs 1 <= i < r, got i=" + std::to_string(i) + ", r=" + std::to_string(r));
  }
  std::vector<int> letters = w.letters();
  const std::size_t n = letters.size();
  // Letters of the factors (i+1) i are frozen.
  std::vector<bool> bold(n, false);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (letters[j] == i + 1 && letters[j + 1] == i) bold[j] = bold[j + 1] = true;
  }
  // Every maximal run of free letters in {i, i+1} has the shape i^a (i+1)^b
  // (an (i+1) i inside it would be bold); rewrite it as i^b (i+1)^a.
  std::size_t j = 0;
  while (j < n) {
    auto free_letter = [&](std::size_t p) { return !bold[p] && (letters[p] == i || letters[p] == i + 1); };
    if (!free_letter(j)) {
      ++j;
      continue;
    }
    std::size_t end = j;
    std::size_t a = 0;
    while (end < n && free_letter(end)) {
      if (letters[end] == i) ++a;
      ++end;
    }
    const std::size_t b = end - j - a;
    std::fill_n(letters.begin() + static_cast<std::ptrdiff_t>(j), b, i);
    std::fill_n(letters.begin() + static_cast<std::ptrdiff_t>(j + b), a, i + 1);
    j = end;
  }
  return Word(std::move(letters));
}

Word rho(const Word& w, int r) {
  r = resolve_alphabet(w, r);
  // rho = g1 (g2 g1) ... (g_{r-1} ... g1); the rightmost group acts first,
  // and inside each group g1 acts first.
  Word out = w;
  for (int m = r - 1; m >= 1; --m) {
    for (int i = 1; i <= m; ++i) out = gamma_i(out, i, r);
  }
  return out;
}

Word des_to_asc(const Word& w, int r) {
  r = resolve_alphabet(w, r);
  return complement(rho(w, r), r);
}

}  // namespace dashed
