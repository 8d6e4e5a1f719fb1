#include <cctype>
#include <limits>
#include <sstream>

#include "dashed/errors.hpp"
#include "dashed/word.hpp"

namespace dashed {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Reads whitespace-separated positive integers from text[begin, end).
std::vector<int> parse_letters(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<int> letters;
  std::size_t i = begin;
  while (i < end) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (!is_digit(text[i])) {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    const std::size_t start = i;
    long long value = 0;
    while (i < end && is_digit(text[i])) {
      value = value * 10 + (text[i] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("letter too large", start);
      ++i;
    }
    if (i < end && !is_space(text[i])) {
      throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    }
    if (value < 1) throw ParseError("letters must be positive integers", start);
    letters.push_back(static_cast<int>(value));
  }
  return letters;
}

bool blank(std::string_view text) {
  for (char c : text) {
    if (!is_space(c)) return false;
  }
  return true;
}

}  // namespace

Word parse_word(std::string_view text) { return Word(parse_letters(text, 0, text.size())); }

BWord parse_bword(std::string_view text) {
  std::vector<Block> blocks;
  if (blank(text)) return BWord{};
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::size_t end = bar == std::string_view::npos ? text.size() : bar;
    std::vector<int> letters = parse_letters(text, start, end);
    if (letters.empty()) throw ParseError("empty block", start);
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] <= letters[i + 1]) {
        throw ParseError("block letters must be strictly decreasing", start);
      }
    }
    blocks.emplace_back(std::move(letters));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return BWord(std::move(blocks));
}

OrderedSetPartition parse_partition(std::string_view text) {
  BWord b = parse_bword(text);
  try {
    return OrderedSetPartition(std::move(b));
  } catch (const InvariantError& e) {
    throw ParseError(std::string("not an ordered set partition: ") + e.what(), 0);
  }
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) os << ' ';
    os << w[i];
  }
  return os.str();
}

std::string to_string(const Block& b) { return to_string(Word(b.letters())); }

std::string to_string(const BWord& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i > 0) out += " | ";
    out += to_string(b[i]);
  }
  return out;
}

std::string to_string(const OrderedSetPartition& p) { return to_string(p.bword()); }

}  // namespace dashed
