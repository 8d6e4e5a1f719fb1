#pragma once

// Ordered-set-partition and permutation statistics.
//
// For pi = B_1 | ... | B_k in OP_n^k (blocks written decreasingly):
//   opener / closer  least / greatest element of a block
//   rsb_i (lsb_i)    blocks right (left) of the block of i whose opener is
//                    below i and whose closer is above i
//   bDES, bASC       block descents / rises for the order << on blocks
//   MAK  = rsb + sum_{closers c} (n - c)
//   MAK' = rsb + sum_{openers o} (o - 1)
//   MIL  = sum_j (j - 1) |B_j|
//   STAT = rsb + k * nbDES + bMAJ,  nbDES = k - 1 - |bDES|

#include <cstdint>
#include <vector>

#include "dashed/index_set.hpp"
#include "dashed/word.hpp"

namespace dashed {

struct PartitionStats {
  int n = 0;
  int k = 0;
  IndexSet openers;
  IndexSet closers;
  std::vector<std::int64_t> rsb_vector;  // index i-1 holds rsb_i
  std::vector<std::int64_t> lsb_vector;
  std::int64_t rsb = 0;
  std::int64_t lsb = 0;
  IndexSet bdes;
  IndexSet basc;
  std::int64_t bmaj = 0;
  std::int64_t nbdes = 0;
  std::int64_t mak = 0;
  std::int64_t makp = 0;
  std::int64_t mil = 0;
  std::int64_t stat = 0;
};

PartitionStats partition_stats(const OrderedSetPartition& p);

struct PermStats {
  std::int64_t des = 0;
  std::int64_t maj = 0;
  std::int64_t mak = 0;
  std::int64_t makp = 0;
};

// Throws NotAPermutation unless w is a permutation of {1..|w|}.
PermStats perm_stats(const Word& w);

}  // namespace dashed
