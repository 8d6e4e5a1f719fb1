#include <doctest.h>

#include "dashed/errors.hpp"
#include "dashed/generators.hpp"
#include "dashed/index_set.hpp"
#include "dashed/word.hpp"

using namespace dashed;

TEST_CASE("IndexSet basics") {
  IndexSet s{1, 4};
  CHECK(s.size() == 2);
  CHECK(s.contains(4));
  CHECK(s.max() == 4);
  CHECK(s.sum() == 5);
  CHECK(s.to_string() == "{1,4}");
  CHECK(IndexSet{}.to_string() == "{}");
  CHECK(IndexSet::interval(2, 4) == IndexSet{2, 3, 4});
  CHECK((IndexSet{1, 2} - IndexSet{2}) == IndexSet{1});
  CHECK(IndexSet{1}.is_subset_of(IndexSet{1, 3}));
  CHECK(IndexSet{1, 5} < IndexSet{2});  // lexicographic on sorted members
  CHECK(IndexSet{} < IndexSet{1});
  CHECK_THROWS_AS(s.insert(0), std::out_of_range);
  CHECK_THROWS_AS(s.insert(64), std::out_of_range);
  s.toggle(4);
  CHECK(s == IndexSet{1});
}

TEST_CASE("Word, Block and partition invariants") {
  CHECK_THROWS_AS(Word({1, 0}), InvariantError);
  CHECK_THROWS_AS(Block({2, 3}), InvariantError);
  CHECK_THROWS_AS(Block(std::vector<int>{}), InvariantError);
  CHECK_THROWS_AS(OrderedSetPartition(BWord{Block{2, 1}, Block{2}}), InvariantError);
  CHECK_THROWS_AS(OrderedSetPartition(BWord{Block{3, 1}}), InvariantError);
  const OrderedSetPartition p(parse_bword("8 5 | 1 | 9 6 2 | 7 4 | 3"));
  CHECK(p.n() == 9);
  CHECK(p.k() == 5);
}

TEST_CASE("compare_blocks") {
  CHECK(compare_blocks(Block{2, 1}, Block{5, 3}) == Comparison::kBelow);
  CHECK(compare_blocks(Block{5, 3}, Block{2, 1}) == Comparison::kAbove);
  CHECK(compare_blocks(Block{5, 3}, Block{5, 3}) == Comparison::kEqual);
  CHECK(compare_blocks(Block{6, 5, 3}, Block{3}) == Comparison::kIncomparable);
  CHECK(compare_blocks(Block{5, 3}, Block{6, 4}) == Comparison::kIncomparable);
}

TEST_CASE("descending runs and flatten") {
  const Word w = parse_word("3 5 4 1 6 5 5 3 6 5");
  CHECK(to_string(descending_runs(w)) == "3 | 5 4 1 | 6 5 | 5 3 | 6 5");
  CHECK(descending_runs(Word{}).empty());
  CHECK(descending_runs(Word{3, 2, 1}).size() == 1);
  CHECK(flatten(parse_bword("3 | 5 4 1 | 6 5")) == Word{3, 5, 4, 1, 6, 5});
  CHECK(flatten(BWord{}).empty());
  CHECK(flatten(parse_bword("5 3 1 | 5 3 | 3 | 7 6 | 6 4")) == parse_word("5 3 1 5 3 3 7 6 6 4"));
  // flatten . runs = id over all short ternary words.
  auto stream = lwords(3, 6);
  while (auto x = stream.next()) CHECK(flatten(descending_runs(*x)) == *x);
}

TEST_CASE("runs of a flattened block word round-trip iff no block descent") {
  const BWord a = parse_bword("2 1 | 5 3 | 6");
  CHECK(descent_set(a).empty());
  CHECK(descending_runs(flatten(a)) == a);
  const BWord b = parse_bword("5 3 | 2 1");
  CHECK(!descent_set(b).empty());
  CHECK(descending_runs(flatten(b)) != b);
}

TEST_CASE("descent and ascent sets") {
  const Word w = parse_word("3 5 4 1 6 5 5 3 6 5");
  CHECK(descent_set(w) == IndexSet{2, 3, 5, 7, 9});
  CHECK(ascent_set(w) == IndexSet{1, 4, 8});
  const BWord b = parse_bword("8 5 | 1 | 9 6 2 | 7 4 | 3");
  CHECK(descent_set(b) == IndexSet{1, 4});
  CHECK(ascent_set(b) == IndexSet{2});
  CHECK(descent_set(Word{4}).empty());
  CHECK(ascent_set(Word{4}).empty());
  // Equal adjacent blocks are neither descents nor ascents.
  const BWord eq = parse_bword("2 1 | 2 1");
  CHECK(descent_set(eq).empty());
  CHECK(ascent_set(eq).empty());
}

TEST_CASE("reverse and complement") {
  CHECK(reverse(Word{2, 5, 4}) == Word{4, 5, 2});
  CHECK(reverse(Word{}).empty());
  const BWord b = parse_bword("3 | 5 4 | 2");
  CHECK(to_string(reverse(b)) == "2 | 5 4 | 3");
  CHECK(reverse(reverse(b)) == b);
  CHECK(complement(Word{5, 3, 4, 2, 1}, 5) == Word{1, 3, 2, 4, 5});
  CHECK(complement(Word{1}, 1) == Word{1});
  CHECK(complement(Word{3, 1, 4, 2}, 4) == Word{2, 4, 1, 3});
  CHECK_THROWS_AS(complement(Word{3, 1, 4, 2}, 3), InvariantError);
  const OrderedSetPartition p(parse_bword("5 3 | 4 | 2 1"));
  CHECK(to_string(complement(p)) == "3 1 | 2 | 5 4");
  // ASC(w) at i iff DES(reverse w) at len - i.
  auto stream = lwords(3, 5);
  while (auto w = stream.next()) {
    const auto asc = ascent_set(*w);
    const auto des_rev = descent_set(reverse(*w));
    for (int i = 1; i < 5; ++i) CHECK(asc.contains(i) == des_rev.contains(5 - i));
    CHECK(complement(complement(*w, 3), 3) == *w);
  }
}

TEST_CASE("T-factorization") {
  const Word w{3, 2, 1};
  CHECK(t_factorization(w, IndexSet{1, 2}) == std::vector<Word>{Word{3, 2, 1}});
  CHECK(t_factorization(w, IndexSet{1}) == std::vector<Word>{Word{3, 2}, Word{1}});
  CHECK(t_factorization(w, IndexSet{}) == std::vector<Word>{Word{3}, Word{2}, Word{1}});
}

TEST_CASE("parsers report offsets") {
  CHECK(parse_word("  2 4 1 ") == Word{2, 4, 1});
  CHECK(parse_word("").empty());
  try {
    parse_word("2 x 1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_word("0 1"), ParseError);
  CHECK_THROWS_AS(parse_bword("3 1 | | 2"), ParseError);
  CHECK_THROWS_AS(parse_bword("1 3 | 2"), ParseError);
  CHECK_THROWS_AS(parse_partition("2 1 | 4"), ParseError);
  CHECK(to_string(parse_bword("8 5|1|9 6 2")) == "8 5 | 1 | 9 6 2");
  CHECK(to_string(parse_partition("2 | 3 1")) == "2 | 3 1");
}
