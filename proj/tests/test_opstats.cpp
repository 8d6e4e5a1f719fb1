#include <doctest.h>

#include "dashed/distribution.hpp"
#include "dashed/errors.hpp"
#include "dashed/generators.hpp"
#include "dashed/opstats.hpp"
#include "dashed/patterns.hpp"

using namespace dashed;

namespace {
OrderedSetPartition OP(const char* text) { return parse_partition(text); }
}  // namespace

TEST_CASE("worked partition statistics") {
  // MAK and MAK' follow the definitions (the source's displayed 19 and 15 are arithmetic slips).
  const auto s = partition_stats(OP("8 5 | 1 | 9 6 2 | 7 4 | 3"));
  CHECK(s.n == 9);
  CHECK(s.k == 5);
  CHECK(s.rsb == 4);
  CHECK(s.lsb == 5);
  CHECK(s.bdes == IndexSet{1, 4});
  CHECK(s.basc == IndexSet{2});
  CHECK(s.bmaj == 5);
  CHECK(s.nbdes == 2);
  CHECK(s.openers == IndexSet{1, 2, 3, 4, 5});
  CHECK(s.closers == IndexSet{1, 3, 7, 8, 9});
  CHECK(s.mil == 17);
  CHECK(s.stat == 19);
  CHECK(s.mak == 21);
  CHECK(s.makp == 14);
}

TEST_CASE("worked permutation statistics") {
  CHECK(perm_stats(parse_word("3 2 1 7 5 6 4")).maj == 13);
  CHECK(perm_stats(parse_word("1 8 5 9 6 2 3 7 4")).mak == 21);
  CHECK(perm_stats(parse_word("1 2 3")).des == 0);
  CHECK_THROWS_AS(perm_stats(Word{1, 1}), NotAPermutation);
}

TEST_CASE("rsb and lsb count the patterns 2-31 and 31-2") {
  const auto p = parse_pattern("2 - 3 1");
  const auto q = parse_pattern("3 1 - 2");
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto stream = ordered_set_partitions(n, k);
      while (auto op = stream.next()) {
        const auto s = partition_stats(*op);
        CHECK(s.rsb == static_cast<std::int64_t>(count_in_bword(p, op->bword())));
        CHECK(s.lsb == static_cast<std::int64_t>(count_in_bword(q, op->bword())));
      }
    }
  }
}

TEST_CASE("complement keeps rsb and lsb; reversing the blocks exchanges them") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto stream = ordered_set_partitions(n, k);
      while (auto op = stream.next()) {
        const auto s = partition_stats(*op);
        const auto c = partition_stats(complement(*op));
        CHECK(c.rsb == s.rsb);
        CHECK(c.lsb == s.lsb);
        CHECK(c.bdes == s.basc);
        CHECK(c.basc == s.bdes);
        const auto r = partition_stats(OrderedSetPartition(reverse(op->bword())));
        CHECK(r.rsb == s.lsb);
        CHECK(r.lsb == s.rsb);
        CHECK(r.bdes.size() == s.basc.size());
      }
    }
  }
}

TEST_CASE("small distributions") {
  const DistributionTable d = partition_distribution(3, 2, partition_statistics({"mak+bmaj"}));
  CHECK(d == DistributionTable{{{StatValue{std::int64_t{1}}}, 2},
                               {{StatValue{std::int64_t{2}}}, 3},
                               {{StatValue{std::int64_t{3}}}, 1}});
  const auto des = distribution(permutations(3), [](const Word& w) {
    return StatKey{StatValue{perm_stats(w).des}};
  });
  CHECK(des == DistributionTable{{{StatValue{std::int64_t{0}}}, 1},
                                 {{StatValue{std::int64_t{1}}}, 4},
                                 {{StatValue{std::int64_t{2}}}, 1}});
}

TEST_CASE("statistic names") {
  CHECK(normalize_statistic_name("MAK′+bMAJ") == "makp+bmaj");
  CHECK(normalize_statistic_name(" lsb − bMAJ + k(k-1) ") == "lsb-bmaj+k(k-1)");
  CHECK(partition_statistic("bDES").set_valued);
  CHECK(!partition_statistic("2*rsb-lsb").set_valued);
  CHECK(std::get<std::int64_t>(partition_statistic("2*rsb-lsb").eval(partition_stats(OP("8 5|1|9 6 2|7 4|3")))) == 3);
  CHECK_THROWS_AS(partition_statistic("nope"), UnknownStatistic);
  CHECK_THROWS_AS(check_euler_mahonian("nope", 3, 2), UnknownStatistic);
}

TEST_CASE("Euler-Mahonian statistics match the q-Stirling target") {
  for (const auto& name : euler_mahonian_statistics()) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 1; k <= n; ++k) {
        const auto r = check_euler_mahonian(name, n, k, 2);
        CHECK_MESSAGE(r.equal, name << " n=" << n << " k=" << k);
      }
    }
  }
  // Permutation mak and maj are Mahonian.
  for (int n = 1; n <= 6; ++n) {
    const auto maj = distribution(permutations(n), [](const Word& w) { return StatKey{StatValue{perm_stats(w).maj}}; });
    const auto mak = distribution(permutations(n), [](const Word& w) { return StatKey{StatValue{perm_stats(w).mak}}; });
    CHECK(maj == mak);
  }
}

TEST_CASE("distributions do not depend on the thread count") {
  const auto stats = partition_statistics({"bdes", "mak", "makp", "open", "clos"});
  const auto one = partition_distribution(7, 4, stats, 1);
  CHECK(one == partition_distribution(7, 4, stats, 3));
  CHECK(one == partition_distribution(7, 4, stats, 8));
}

TEST_CASE("permute_keys and first_difference") {
  const DistributionTable t{{{StatValue{std::int64_t{1}}, StatValue{std::int64_t{2}}}, 5}};
  const DistributionTable swapped = permute_keys(t, {1, 0});
  CHECK(swapped == DistributionTable{{{StatValue{std::int64_t{2}}, StatValue{std::int64_t{1}}}, 5}});
  const auto diff = first_difference(t, swapped);
  REQUIRE(diff.has_value());
  CHECK(!first_difference(t, t).has_value());
}

TEST_CASE("conjecture checker") {
  const auto r1 = check_conjecture(1);
  CHECK(r1.all_equal);
  CHECK(r1.rows.size() == 1);
  const auto r3 = check_conjecture(3, false, 2);
  CHECK(r3.all_equal);
  CHECK(r3.rows.size() == 3);
  CHECK(r3.rows[1].partitions == 6);
  CHECK(r3.note.find("not a proof") != std::string::npos);
  // Keyed on the bDES set instead of its size, the equidistribution already fails at n = 4.
  CHECK(check_conjecture(3, true, 2).all_equal);
  const auto sv = check_conjecture(4, true, 2);
  CHECK(!sv.all_equal);
  CHECK(!sv.rows[2].equal);
}
