#include "dashed/index_set.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace dashed {

namespace {

void check_range(int i) {
  if (i < 1 || i > IndexSet::kMaxIndex) {
    throw std::out_of_range("index " + std::to_string(i) + " outside [1, " +
                            std::to_string(IndexSet::kMaxIndex) + "]");
  }
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> members) {
  for (int i : members) insert(i);
}

IndexSet::IndexSet(const std::vector<int>& members) {
  for (int i : members) insert(i);
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
  IndexSet s;
  s.mask_ = mask & ~std::uint64_t{1};
  return s;
}

IndexSet IndexSet::interval(int lo, int hi) {
  IndexSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

void IndexSet::insert(int i) {
  check_range(i);
  mask_ |= std::uint64_t{1} << i;
}

void IndexSet::erase(int i) {
  check_range(i);
  mask_ &= ~(std::uint64_t{1} << i);
}

void IndexSet::toggle(int i) {
  check_range(i);
  mask_ ^= std::uint64_t{1} << i;
}

bool IndexSet::contains(int i) const {
  if (i < 1 || i > kMaxIndex) return false;
  return (mask_ >> i) & 1U;
}

int IndexSet::size() const { return std::popcount(mask_); }

int IndexSet::max() const { return mask_ == 0 ? 0 : 63 - std::countl_zero(mask_); }

std::int64_t IndexSet::sum() const {
  std::int64_t total = 0;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) total += std::countr_zero(m);
  return total;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : to_vector()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  const int low = std::countr_zero(diff);
  const std::uint64_t above = ~((std::uint64_t{2} << low) - 1);
  // The set holding `low` is smaller unless the other set has nothing past it.
  if ((a.mask_ >> low) & 1U) {
    return (b.mask_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (a.mask_ & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace dashed
