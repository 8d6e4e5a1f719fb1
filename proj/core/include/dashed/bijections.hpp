#pragma once

// Bijections on partially commutative monoids.
//
//  theta          minimal word -> the maximal word of its class
//  involution_F   reverse every T-factor, moving between the DES-marked
//                 signed set Y and the ASC-marked signed set Z
//  gamma          DES(w) = ASC(gamma(w)), gamma(w) in [w]; built from F and
//                 the sign-reversing involutions phi (on Y) and psi (on Z)
//                 by the involution principle
//  epsilon        word -> word, the descending-run transform flatten . Rev .
//                 theta . runs
//  gamma_i, rho   descent-preserving multiplicity swaps on rearrangement
//                 classes over a totally ordered alphabet
//
// The templates take any element type with a poset oracle; Word and BWord
// overloads are provided for the two concrete monoids.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "dashed/errors.hpp"
#include "dashed/monoid.hpp"
#include "dashed/word.hpp"

namespace dashed {

enum class Side { kY, kZ };

// (word, T) in Y (T inside DES(word)) or Z (T inside ASC(word)), with the
// base set S inside T.
template <class E>
struct SignedPair {
  std::vector<E> word;
  IndexSet marks;  // T
  IndexSet base;   // S
  Side side = Side::kY;

  // +1 when |T| - |S| is even.
  int sign() const { return (marks.size() - base.size()) % 2 == 0 ? 1 : -1; }

  friend bool operator==(const SignedPair&, const SignedPair&) = default;
};

template <class E, class Order>
bool is_valid(const SignedPair<E>& p, Order order) {
  if (!p.base.is_subset_of(p.marks)) return false;
  const std::span<const E> w(p.word);
  const IndexSet bound = p.side == Side::kY ? descent_set(w, order) : ascent_set(w, order);
  return p.marks.is_subset_of(bound);
}

template <class E>
struct GammaStep {
  std::string op;  // "F", "F^-1", "phi", "psi"
  std::vector<E> word;
  IndexSet marks;
};

template <class E>
using GammaTrace = std::vector<GammaStep<E>>;

// Maximal word of the class of a minimal word, by insertion: each letter x of
// w in turn goes into theta(prefix) right after the last letter it cannot
// commute with (incomparable or equal), then past any letters above it.
template <class E, class Order>
std::vector<E> theta(std::span<const E> w, Order order) {
  if (!descent_set(w, order).empty()) throw NotMinimal("theta requires a word with no descent");
  std::vector<E> out;
  out.reserve(w.size());
  for (const E& x : w) {
    std::size_t pos = 0;
    for (std::size_t i = out.size(); i-- > 0;) {
      if (!comparable_distinct(order(out[i], x))) {
        pos = i + 1;
        break;
      }
    }
    while (pos < out.size() && order(out[pos], x) == Comparison::kAbove) ++pos;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), x);
  }
  return out;
}

// F : Y -> Z and its inverse G : Z -> Y share one formula: reverse every
// factor of the T-factorization and switch sides.
template <class E>
SignedPair<E> involution_F(const SignedPair<E>& p) {
  SignedPair<E> out{{}, p.marks, p.base, p.side == Side::kY ? Side::kZ : Side::kY};
  out.word.reserve(p.word.size());
  for (auto& segment : t_factorization(std::span<const E>(p.word), p.marks)) {
    out.word.insert(out.word.end(), segment.rbegin(), segment.rend());
  }
  return out;
}

// Sign-reversing involution on Y: toggles d = max(DES(w) \ S) in T; the
// pairs (w, S) with DES(w) = S are its fixed points.
template <class E, class Order>
SignedPair<E> phi(const SignedPair<E>& p, Order order) {
  const IndexSet free = descent_set(std::span<const E>(p.word), order) - p.base;
  if (free.empty()) return p;
  SignedPair<E> out = p;
  out.marks.toggle(free.max());
  return out;
}

// Sign-reversing involution on Z: toggles a = max(ASC(w) \ S) in T.
template <class E, class Order>
SignedPair<E> psi(const SignedPair<E>& p, Order order) {
  const IndexSet free = ascent_set(std::span<const E>(p.word), order) - p.base;
  if (free.empty()) return p;
  SignedPair<E> out = p;
  out.marks.toggle(free.max());
  return out;
}

// Upper bound on the number of involution-principle rounds: the number of
// distinct rearrangements of w times the number of index sets, saturating.
template <class E>
std::uint64_t default_gamma_cap(std::span<const E> w) {
  constexpr std::uint64_t kSaturate = std::uint64_t{1} << 62;
  std::vector<E> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  std::uint64_t cap = 1;
  // Multinomial n! / prod(m_i!), built incrementally as binomials.
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
    // cap *= (i + 1) / run, exact because cap * (i+1) is divisible by run.
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(cap, static_cast<std::uint64_t>(i + 1), &product) || product / run > kSaturate) {
      return kSaturate;
    }
    cap = product / run;
  }
  const std::size_t index_bits = w.empty() ? 0 : w.size() - 1;
  for (std::size_t i = 0; i < index_bits && cap < kSaturate; ++i) cap = std::min(kSaturate, cap * 2);
  return cap;
}

namespace detail {

template <class E, class Order>
std::vector<E> run_involution_principle(std::span<const E> w, Order order, bool inverse, GammaTrace<E>* trace,
                                        std::uint64_t cap) {
  if (cap == 0) cap = default_gamma_cap(w);
  const std::span<const E> view = w;
  const IndexSet s = inverse ? ascent_set(view, order) : descent_set(view, order);
  SignedPair<E> p{std::vector<E>(w.begin(), w.end()), s, s, inverse ? Side::kZ : Side::kY};
  const char* cross = inverse ? "F^-1" : "F";
  const char* back = inverse ? "F" : "F^-1";
  auto record = [&](const char* op) {
    if (trace != nullptr) trace->push_back({op, p.word, p.marks});
  };
  // Target side fixed points: ASC(w) = S going forward, DES(w) = S inverse.
  auto done = [&] {
    const std::span<const E> cur(p.word);
    return (inverse ? descent_set(cur, order) : ascent_set(cur, order)) == s;
  };
  p = involution_F(p);
  record(cross);
  std::uint64_t rounds = 0;
  while (!done()) {
    if (++rounds > cap) throw IterationCapExceeded("involution principle did not terminate within cap");
    p = inverse ? phi(p, order) : psi(p, order);
    record(inverse ? "phi" : "psi");
    p = involution_F(p);
    record(back);
    p = inverse ? psi(p, order) : phi(p, order);
    record(inverse ? "psi" : "phi");
    p = involution_F(p);
    record(cross);
  }
  return std::move(p.word);
}

}  // namespace detail

// Gamma: iterates F (phi F^-1 psi F)^j on (w, DES(w)) until the word has
// ascent set DES(w). Pass cap = 0 for the default bound.
template <class E, class Order>
std::vector<E> gamma(std::span<const E> w, Order order, GammaTrace<E>* trace = nullptr, std::uint64_t cap = 0) {
  return detail::run_involution_principle(w, order, false, trace, cap);
}

// Mirrored iteration starting on the Z side with S = ASC(w).
template <class E, class Order>
std::vector<E> gamma_inverse(std::span<const E> w, Order order, GammaTrace<E>* trace = nullptr,
                             std::uint64_t cap = 0) {
  return detail::run_involution_principle(w, order, true, trace, cap);
}

// Concrete instances.
BWord theta(const BWord& b);
Word theta(const Word& w);
BWord gamma(const BWord& b, GammaTrace<Block>* trace = nullptr);
Word gamma(const Word& w, GammaTrace<int>* trace = nullptr);
BWord gamma_inverse(const BWord& b, GammaTrace<Block>* trace = nullptr);
Word gamma_inverse(const Word& w, GammaTrace<int>* trace = nullptr);

EquivClass<Block> equivalence_class(const BWord& b, std::size_t cap = kDefaultClassCap);
EquivClass<int> equivalence_class(const Word& w, std::size_t cap = kDefaultClassCap);

struct EpsilonTrace {
  BWord runs;       // pi^w
  BWord maximal;    // theta(pi^w)
  BWord reversed;   // Rev theta(pi^w)
};

Word epsilon(const Word& w, EpsilonTrace* trace = nullptr);

// Over the alphabet {1..r}; r = 0 means "use the largest letter".
// gamma_i exchanges the multiplicities of i and i+1 keeping DES fixed.
Word gamma_i(const Word& w, int i, int r = 0);
// gamma_1 (gamma_2 gamma_1) ... (gamma_{r-1} ... gamma_1): R(n_1..n_r) -> R(n_r..n_1).
Word rho(const Word& w, int r = 0);
// complement . rho: DES(w) = ASC(des_to_asc(w)) inside the rearrangement class.
Word des_to_asc(const Word& w, int r = 0);

}  // namespace dashed
