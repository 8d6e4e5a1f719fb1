#include "dashed/opstats.hpp"

#include <string>

#include "dashed/errors.hpp"

namespace dashed {

PartitionStats partition_stats(const OrderedSetPartition& p) {
  PartitionStats s;
  s.n = p.n();
  s.k = p.k();
  const auto& blocks = p.blocks();
  const auto n = static_cast<std::size_t>(s.n);
  const auto k = static_cast<std::size_t>(s.k);

  std::vector<std::size_t> block_of(n + 1, 0);
  for (std::size_t j = 0; j < k; ++j) {
    const Block& b = blocks[j];
    for (int x : b.letters()) block_of[static_cast<std::size_t>(x)] = j;
    s.openers.insert(b.min());
    s.closers.insert(b.max());
    s.mak += s.n - b.max();
    s.makp += b.min() - 1;
    s.mil += static_cast<std::int64_t>(j) * static_cast<std::int64_t>(b.size());
  }

  s.rsb_vector.assign(n, 0);
  s.lsb_vector.assign(n, 0);
  for (int i = 1; i <= s.n; ++i) {
    const std::size_t home = block_of[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < k; ++j) {
      if (j == home || blocks[j].min() >= i || blocks[j].max() <= i) continue;
      ++(j > home ? s.rsb_vector : s.lsb_vector)[static_cast<std::size_t>(i) - 1];
    }
    s.rsb += s.rsb_vector[static_cast<std::size_t>(i) - 1];
    s.lsb += s.lsb_vector[static_cast<std::size_t>(i) - 1];
  }

  const std::span<const Block> view(blocks);
  s.bdes = descent_set(view, BlockOrder{});
  s.basc = ascent_set(view, BlockOrder{});
  s.bmaj = s.bdes.sum();
  s.nbdes = s.k - 1 - s.bdes.size();
  s.mak += s.rsb;
  s.makp += s.rsb;
  s.stat = s.rsb + s.k * s.nbdes + s.bmaj;
  return s;
}

PermStats perm_stats(const Word& w) {
  const std::size_t n = w.size();
  std::vector<bool> seen(n + 1, false);
  for (int x : w) {
    if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) {
      throw NotAPermutation("not a permutation of {1.." + std::to_string(n) + "}: " + to_string(w));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  PermStats out;
  const IndexSet des = descent_set(w);
  out.des = des.size();
  out.maj = des.sum();
  if (n == 0) return out;
  const OrderedSetPartition runs(descending_runs(w));
  const PartitionStats ps = partition_stats(runs);
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t offset = nn * (nn + 1) / 2 - static_cast<std::int64_t>(ps.k) * nn;
  out.mak = ps.mak + offset;
  out.makp = ps.makp + offset;
  return out;
}

}  // namespace dashed
