#pragma once

// Distribution tables, the statistic registry, and the exhaustive checkers
// built on them (Euler-Mahonian battery, MIL/MAK conjecture).
//
// Statistic names are case-insensitive; a prime (' or U+2032) reads as "p"
// and U+2212 as '-'. Besides the base statistics, any integer linear
// combination of scalar bases is accepted, e.g. "MAK+bMAJ", "2*rsb-lsb",
// "lsb-bMAJ+k(k-1)".

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dashed/generators.hpp"
#include "dashed/index_set.hpp"
#include "dashed/opstats.hpp"
#include "dashed/qpoly.hpp"

namespace dashed {

using StatValue = std::variant<std::int64_t, IndexSet>;
using StatKey = std::vector<StatValue>;
// Sorted by value tuple, so iteration order is deterministic.
using DistributionTable = std::map<StatKey, std::uint64_t>;

std::string to_string(const StatValue& v);
std::string to_string(const StatKey& key);

void merge_into(DistributionTable& into, const DistributionTable& from);

// Tally of key(item) over every item of the stream.
template <Stream S, class KeyFn>
DistributionTable distribution(S stream, KeyFn&& key) {
  DistributionTable out;
  while (auto item = stream.next()) ++out[key(*item)];
  return out;
}

struct PartitionStatistic {
  std::string name;  // normalized
  bool set_valued = false;
  std::function<StatValue(const PartitionStats&)> eval;
};

std::string normalize_statistic_name(std::string_view name);
// Throws UnknownStatistic for names that are neither a base statistic nor a
// linear combination of scalar ones.
PartitionStatistic partition_statistic(std::string_view name);
std::vector<PartitionStatistic> partition_statistics(const std::vector<std::string>& names);
// Base names, normalized: scalars then set-valued ones.
std::vector<std::string> partition_statistic_names();

// Worker count: DASHED_THREADS when set to a positive integer, otherwise the
// number of logical cores.
int default_threads();

// Joint distributions over OP_n^k, one table per statistic group, from a
// single parallel pass. threads <= 0 means default_threads(). The result does
// not depend on the thread count.
std::vector<DistributionTable> partition_distributions(int n, int k,
                                                       const std::vector<std::vector<PartitionStatistic>>& groups,
                                                       int threads = 0);
DistributionTable partition_distribution(int n, int k, const std::vector<PartitionStatistic>& stats,
                                         int threads = 0);

struct Difference {
  StatKey key;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
};

// Smallest key whose counts differ, if any.
std::optional<Difference> first_difference(const DistributionTable& left, const DistributionTable& right);

// Distribution table with each key's components permuted by `order`.
DistributionTable permute_keys(const DistributionTable& table, const std::vector<std::size_t>& order);

// The five statistics the battery knows, normalized.
const std::vector<std::string>& euler_mahonian_statistics();

struct EulerMahonianReport {
  std::string statistic;  // normalized
  int n = 0;
  int k = 0;
  std::map<std::int64_t, std::uint64_t> distribution;  // value -> count
  QPoly target;
  bool equal = false;
};

// Compares the distribution of `statistic` over OP_n^k with [k]_q! S_q(n, k).
// Throws UnknownStatistic unless the name is one of euler_mahonian_statistics().
EulerMahonianReport check_euler_mahonian(std::string_view statistic, int n, int k, int threads = 0);

struct ConjectureRow {
  int k = 0;
  bool equal = false;
  std::optional<Difference> difference;
  std::uint64_t partitions = 0;
};

struct ConjectureReport {
  int n = 0;
  bool set_valued = false;
  std::vector<ConjectureRow> rows;
  bool all_equal = false;
  std::string note;
};

// For every k <= n compares (bDES, MIL+bMAJ) with (bDES, MAK+bMAJ) over
// OP_n^k; bDES is |bDES| unless set_valued. Equality is evidence only.
ConjectureReport check_conjecture(int n, bool set_valued = false, int threads = 0);

}  // namespace dashed
