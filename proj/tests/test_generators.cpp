#include <doctest.h>

#include <set>

#include "dashed/errors.hpp"
#include "dashed/generators.hpp"
#include "dashed/qpoly.hpp"
#include "oracles.hpp"

using namespace dashed;

TEST_CASE("permutations and words") {
  CHECK(materialize(permutations(0)) == std::vector<Word>{Word{}});
  const auto s3 = materialize(permutations(3));
  CHECK(s3.size() == 6);
  CHECK(s3.front() == Word{1, 2, 3});
  CHECK(s3.back() == Word{3, 2, 1});
  CHECK(materialize(permutations(5)).size() == 120);
  CHECK(materialize(lwords(2, 2)) == std::vector<Word>{Word{1, 1}, Word{1, 2}, Word{2, 1}, Word{2, 2}});
  CHECK(materialize(lwords(3, 0)).size() == 1);
  CHECK(materialize(lwords(3, 4)).size() == 81);
  auto s = permutations(3);
  (void)s.next();
  s.reset();
  CHECK(s.next() == Word{1, 2, 3});
}

TEST_CASE("compositions") {
  const auto c = materialize(compositions(4, PartSet{1, 2}));
  std::vector<Word> parts;
  std::vector<int> lengths;
  for (const auto& x : c) {
    parts.push_back(x.parts);
    lengths.push_back(x.n);
  }
  CHECK(parts == std::vector<Word>{Word{2, 2}, Word{1, 1, 2}, Word{1, 2, 1}, Word{2, 1, 1}, Word{1, 1, 1, 1}});
  CHECK(lengths == std::vector<int>{2, 3, 3, 3, 4});
  CHECK(materialize(compositions(1, PartSet{1})).size() == 1);
  CHECK(materialize(compositions(3, PartSet{2})).empty());
  // Parts {1,2,3}: tribonacci-like counts.
  CHECK(materialize(compositions(10, PartSet{1, 2, 3})).size() == 274);
}

TEST_CASE("ordered set partitions") {
  CHECK(materialize(ordered_set_partitions(3, 2)).size() == 6);
  CHECK(materialize(ordered_set_partitions(4, 4)).size() == 24);
  const auto one = materialize(ordered_set_partitions(2, 1));
  REQUIRE(one.size() == 1);
  CHECK(to_string(one.front()) == "2 1");
  CHECK(materialize(ordered_set_partitions(2, 3)).empty());
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      const auto all = materialize(ordered_set_partitions(n, k));
      std::uint64_t fact = 1;
      for (int j = 2; j <= k; ++j) fact *= static_cast<std::uint64_t>(j);
      CHECK(all.size() == fact * stirling2(n, k));
      CHECK(std::set<OrderedSetPartition>(all.begin(), all.end()).size() == all.size());
      total += all.size();
    }
    CHECK(total == ordered_bell(n));
  }
  CHECK(ordered_bell(8) == 545835);
  CHECK(ordered_bell(9) == 7087261);
}

TEST_CASE("prefix chunks cover the stream exactly") {
  const auto all = materialize(ordered_set_partitions(6, 3));
  std::vector<OrderedSetPartition> chunked;
  for (const auto& prefix : OrderedSetPartitionStream::prefixes(6, 3, 3)) {
    auto part = materialize(OrderedSetPartitionStream(6, 3, prefix));
    chunked.insert(chunked.end(), part.begin(), part.end());
  }
  CHECK(chunked == all);
}

TEST_CASE("r_class and words_with_runs") {
  CHECK(materialize(r_class({Block{2, 1}, Block{2, 1}, Block{5, 3}}, false)).size() == 3);
  const auto minimal = materialize(r_class({Block{4, 2, 1}, Block{6, 5}, Block{7, 5}}, true));
  std::set<std::string> names;
  for (const auto& b : minimal) names.insert(to_string(b));
  CHECK(names == std::set<std::string>{"4 2 1 | 6 5 | 7 5", "4 2 1 | 7 5 | 6 5"});
  CHECK(materialize(r_class({Block{3, 2, 1}}, false)).size() == 1);

  auto w1 = materialize(words_with_runs({Block{3, 2, 1}, Block{6, 4}, Block{7, 5}}));
  std::sort(w1.begin(), w1.end());
  CHECK(w1 == std::vector<Word>{parse_word("3 2 1 6 4 7 5"), parse_word("3 2 1 7 5 6 4")});
  CHECK(materialize(words_with_runs({Block{2, 1}, Block{2, 1}, Block{5, 3}})) ==
        std::vector<Word>{parse_word("2 1 2 1 5 3")});
  CHECK(materialize(words_with_runs({Block{1}})) == std::vector<Word>{Word{1}});
  // Agrees with the filter definition on a few multisets.
  for (const RunMultiset& m : std::vector<RunMultiset>{{Block{3, 1}, Block{2}, Block{3}},
                                                       {Block{2}, Block{2}, Block{1}},
                                                       {Block{4, 2}, Block{3, 1}, Block{2}}}) {
    auto fast = materialize(words_with_runs(m));
    std::sort(fast.begin(), fast.end());
    CHECK(fast == oracle::filter_words_with_runs(m));
  }
}

TEST_CASE("fixed run permutations") {
  CHECK(materialize(fixed_run_perms(2, 2)) == std::vector<Word>{Word{2, 1}});
  CHECK(materialize(fixed_run_perms(1, 3)) == std::vector<Word>{Word{1, 2, 3}});
  CHECK_THROWS_AS(fixed_run_perms(2, 3), InvariantError);
  for (int k = 1; k <= 3; ++k) {
    for (int n = k; n <= 6; n += k) {
      std::vector<Word> filtered;
      auto perms = permutations(n);
      while (auto w = perms.next()) {
        const auto runs = descending_runs(*w);
        if (std::all_of(runs.begin(), runs.end(), [&](const Block& b) { return b.size() == std::size_t(k); })) {
          filtered.push_back(*w);
        }
      }
      CHECK(materialize(fixed_run_perms(k, n)) == filtered);
    }
  }
}

TEST_CASE("run and reverse completeness of the word collections") {
  auto check = [](const std::vector<Word>& coll) {
    const std::set<Word> all(coll.begin(), coll.end());
    for (const auto& w : coll) {
      CHECK(all.count(reverse(w)) == 1);
      auto stream = words_with_runs(descending_runs(w).blocks());
      while (auto v = stream.next()) CHECK(all.count(*v) == 1);
    }
  };
  check(materialize(permutations(5)));
  check(materialize(lwords(3, 5)));
  std::vector<Word> comps;
  auto cs = compositions(8, PartSet{1, 2, 3});
  while (auto c = cs.next()) comps.push_back(c->parts);
  check(comps);
}

TEST_CASE("q-analogues") {
  CHECK(q_stirling(1, 1) == QPoly{1});
  CHECK(q_stirling(3, 2) == QPoly{0, 2, 1});
  CHECK(em_target(3, 2) == QPoly{0, 2, 3, 1});
  CHECK(em_target(3, 2).to_string() == "2q + 3q^2 + q^3");
  CHECK(q_stirling(0, 0) == QPoly{1});
  CHECK(q_stirling(3, 0).is_zero());
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::uint64_t fact = 1;
      for (int j = 2; j <= k; ++j) fact *= static_cast<std::uint64_t>(j);
      CHECK(static_cast<std::uint64_t>(em_target(n, k).at_one()) == fact * stirling2(n, k));
    }
  }
  const std::vector<std::int64_t> ex{0, 2, 2, 5};
  CHECK(QPoly::from_exponents(ex) == QPoly{1, 0, 2, 0, 0, 1});
  const std::vector<std::int64_t> bad{-1};
  CHECK_THROWS_AS(QPoly::from_exponents(bad), InvariantError);
}
