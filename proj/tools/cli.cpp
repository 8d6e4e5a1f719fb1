#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

#include "dashed/bijections.hpp"
#include "dashed/distribution.hpp"
#include "dashed/errors.hpp"
#include "dashed/generators.hpp"
#include "dashed/monoid.hpp"
#include "dashed/opstats.hpp"
#include "dashed/patterns.hpp"
#include "dashed/qpoly.hpp"
#include "dashed/word.hpp"

namespace dashed::cli {

namespace {

using json = nlohmann::json;
using Table = std::vector<std::vector<std::string>>;

// Bad command-line content (as opposed to a library-level parse error).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Verification outcome shown to the user; `failed` maps to exit code 1.
struct Report {
  json body;
  Table csv;  // optional flattened table; header row first
  bool failed = false;
};

json to_json(const IndexSet& s) { return s.to_vector(); }

json to_json(const StatValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return to_json(std::get<IndexSet>(v));
}

std::string cell(const StatValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<IndexSet>(v).to_string();
}

json to_json(const DistributionTable& table) {
  json rows = json::array();
  for (const auto& [key, count] : table) {
    json row = json::array();
    for (const auto& v : key) row.push_back(to_json(v));
    row.push_back(count);
    rows.push_back(std::move(row));
  }
  return rows;
}

void append_rows(Table& csv, const DistributionTable& table, const std::vector<std::string>& prefix = {}) {
  for (const auto& [key, count] : table) {
    std::vector<std::string> row = prefix;
    for (const auto& v : key) row.push_back(cell(v));
    row.push_back(std::to_string(count));
    csv.push_back(std::move(row));
  }
}

std::vector<std::string> header(const std::vector<std::string>& lead, const std::vector<std::string>& names) {
  std::vector<std::string> row = lead;
  row.insert(row.end(), names.begin(), names.end());
  row.emplace_back("count");
  return row;
}

json qpoly_json(const QPoly& q) {
  json rows = json::array();
  for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
    if (q.coeffs()[i] != 0) rows.push_back(json::array({i, q.coeffs()[i]}));
  }
  return rows;
}

// ---- collections ------------------------------------------------------------

struct Collection {
  std::string kind;
  std::string text;
  std::vector<int> params;
  std::set<int> parts;
  RunMultiset runs;
};

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

void bound(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

Collection parse_collection(const std::string& text) {
  Collection c;
  c.text = text;
  const auto t = tokens(text);
  if (t.empty()) throw UsageError("empty collection");
  c.kind = t[0];
  auto ints = [&](std::size_t count) {
    if (t.size() != count + 1) {
      throw UsageError("collection '" + c.kind + "' takes " + std::to_string(count) + " integer argument(s)");
    }
    for (std::size_t i = 1; i <= count; ++i) c.params.push_back(parse_int(t[i], c.kind + " argument"));
  };
  if (c.kind == "perms") {
    ints(1);
    bound(c.params[0] >= 0 && c.params[0] <= 10, "perms n needs 0 <= n <= 10");
  } else if (c.kind == "words") {
    ints(2);
    const int l = c.params[0];
    const int n = c.params[1];
    bound(l >= 1 && n >= 0 && n <= 16, "words l n needs l >= 1 and 0 <= n <= 16");
    double size = 1;
    for (int i = 0; i < n; ++i) size *= l;
    bound(size <= 5e7, "words l n: l^n exceeds the desk-scale bound 5e7");
  } else if (c.kind == "comps") {
    if (t.size() < 3) throw UsageError("collection 'comps' takes s and a part set, e.g. \"comps 10 1,2,3\"");
    c.params.push_back(parse_int(t[1], "comps s"));
    bound(c.params[0] >= 1 && c.params[0] <= 30, "comps s needs 1 <= s <= 30");
    std::string rest;
    for (std::size_t i = 2; i < t.size(); ++i) rest += t[i] + " ";
    std::replace_if(rest.begin(), rest.end(), [](char ch) { return ch == ',' || ch == '{' || ch == '}'; }, ' ');
    for (const auto& p : tokens(rest)) c.parts.insert(parse_int(p, "part"));
    if (c.parts.empty() || *c.parts.begin() < 1) throw UsageError("comps part set must hold positive integers");
  } else if (c.kind == "op") {
    ints(2);
    bound(c.params[0] >= 1 && c.params[0] <= 10, "op n k needs 1 <= n <= 10");
    bound(c.params[1] >= 1 && c.params[1] <= c.params[0], "op n k needs 1 <= k <= n");
  } else if (c.kind == "runs") {
    const auto at = text.find("runs");
    std::string m = text.substr(at + 4);
    // The multiset may be quoted, as in: runs "3 2 1 | 6 4".
    std::erase(m, '"');
    std::erase(m, '\'');
    c.runs = parse_bword(m).blocks();
    std::size_t letters = 0;
    for (const auto& b : c.runs) letters += b.size();
    bound(letters <= 12, "runs M: total length must be at most 12");
  } else if (c.kind == "fixedruns") {
    ints(2);
    bound(c.params[0] >= 1 && c.params[1] >= 0 && c.params[1] <= 12 && c.params[1] % c.params[0] == 0,
          "fixedruns k n needs k >= 1, k | n and n <= 12");
  } else {
    throw UsageError("unknown collection '" + c.kind + "' (perms, words, comps, op, runs, fixedruns)");
  }
  return c;
}

// Calls fn(word) or fn(bword) for every member; op members are BWords.
void for_each_member(const Collection& c, const std::function<void(const Word*, const BWord*)>& fn) {
  auto words = [&](auto stream) {
    while (auto w = stream.next()) fn(&*w, nullptr);
  };
  if (c.kind == "perms") {
    words(permutations(c.params[0]));
  } else if (c.kind == "words") {
    words(lwords(c.params[0], c.params[1]));
  } else if (c.kind == "comps") {
    auto stream = compositions(c.params[0], PartSet(c.parts));
    while (auto comp = stream.next()) fn(&comp->parts, nullptr);
  } else if (c.kind == "op") {
    auto stream = ordered_set_partitions(c.params[0], c.params[1]);
    while (auto p = stream.next()) fn(nullptr, &p->bword());
  } else if (c.kind == "runs") {
    words(words_with_runs(c.runs));
  } else if (c.kind == "fixedruns") {
    words(fixed_run_perms(c.params[0], c.params[1]));
  }
}

std::vector<DashedPattern> parse_patterns(const std::vector<std::string>& texts) {
  std::vector<DashedPattern> out;
  for (const auto& t : texts) out.push_back(parse_pattern(t));
  return out;
}

json pattern_names(const std::vector<DashedPattern>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

using CountTable = std::map<std::vector<std::uint64_t>, std::uint64_t>;

json to_json(const CountTable& t) {
  json rows = json::array();
  for (const auto& [key, count] : t) {
    json row(key);
    row.push_back(count);
    rows.push_back(std::move(row));
  }
  return rows;
}

void append_rows(Table& csv, const CountTable& t, const std::string& side) {
  for (const auto& [key, count] : t) {
    std::vector<std::string> row{side};
    for (auto v : key) row.push_back(std::to_string(v));
    row.push_back(std::to_string(count));
    csv.push_back(std::move(row));
  }
}

json seq_json(const Word& w) { return to_string(w); }
json seq_json(const BWord& b) { return to_string(b); }

template <class E>
json seq_json(const std::vector<E>& v) {
  if constexpr (std::is_same_v<E, int>) return to_string(Word(v));
  else return to_string(BWord(v));
}

// Either --word or --bword; exactly one.
struct Sequence {
  std::optional<Word> word;
  std::optional<BWord> bword;
};

Sequence read_sequence(const std::string& word, const std::string& bword) {
  const bool has_word = !word.empty();
  const bool has_bword = !bword.empty();
  if (has_word == has_bword) throw UsageError("give exactly one of --word and --bword");
  Sequence s;
  if (has_word) s.word = parse_word(word);
  else s.bword = parse_bword(bword);
  return s;
}

// ---- subcommands ------------------------------------------------------------

struct Options {
  std::string word, bword, partition, perm, collection;
  std::vector<std::string> patterns, left, right, stats;
  bool list = false, trace = false, inverse = false, symmetric = false, set_valued = false;
  std::size_t cap = kDefaultClassCap;
  int n = 0;
  int k = 0;
};

Report cmd_occ(const Options& o) {
  if (o.patterns.empty()) throw UsageError("occ needs at least one --pattern");
  const auto ps = parse_patterns(o.patterns);
  const Sequence seq = read_sequence(o.word, o.bword);
  Report r;
  std::vector<std::uint64_t> counts =
      seq.word ? multi_stat(std::span<const DashedPattern>(ps), *seq.word)
               : multi_stat(std::span<const DashedPattern>(ps), *seq.bword);
  r.body["patterns"] = pattern_names(ps);
  r.body["counts"] = counts;
  if (counts.size() == 1) r.body["count"] = counts.front();
  r.body["input"] = seq.word ? seq_json(*seq.word) : seq_json(*seq.bword);
  if (o.list) {
    if (!seq.word) throw UsageError("--list is only available with --word");
    json all = json::array();
    for (const auto& p : ps) all.push_back(occurrences_in_word(p, *seq.word));
    r.body["occurrences"] = all;
  }
  r.csv.push_back({"pattern", "count"});
  for (std::size_t i = 0; i < ps.size(); ++i) r.csv.push_back({to_string(ps[i]), std::to_string(counts[i])});
  return r;
}

Report cmd_wilf(const Options& o) {
  if (o.collection.empty()) throw UsageError("wilf needs --collection");
  const Collection c = parse_collection(o.collection);
  std::vector<DashedPattern> left;
  std::vector<DashedPattern> right;
  if (o.symmetric) {
    if (o.patterns.size() != 2 || !o.left.empty() || !o.right.empty()) {
      throw UsageError("--symmetric takes exactly two --pattern values");
    }
    left = parse_patterns(o.patterns);
    right = {left[1], left[0]};
  } else if (!o.left.empty() || !o.right.empty()) {
    if (!o.patterns.empty()) throw UsageError("use either --pattern or --left/--right");
    left = parse_patterns(o.left);
    right = parse_patterns(o.right);
    if (left.size() != right.size() || left.empty()) {
      throw UsageError("--left and --right need the same positive number of patterns");
    }
  } else {
    if (o.patterns.size() != 2) throw UsageError("wilf needs two --pattern values (or --left/--right tuples)");
    const auto ps = parse_patterns(o.patterns);
    left = {ps[0]};
    right = {ps[1]};
  }
  if (c.kind == "op") {
    for (const auto* side : {&left, &right}) {
      for (const auto& p : *side) {
        if (!classify(p).piecewise_decreasing) {
          throw UsageError("pattern " + to_string(p) + " is not piecewise decreasing; op members are block words");
        }
      }
    }
  }
  CountTable lt;
  CountTable rt;
  std::uint64_t items = 0;
  for_each_member(c, [&](const Word* w, const BWord* b) {
    ++items;
    if (w != nullptr) {
      ++lt[multi_stat(std::span<const DashedPattern>(left), *w)];
      ++rt[multi_stat(std::span<const DashedPattern>(right), *w)];
    } else {
      ++lt[multi_stat(std::span<const DashedPattern>(left), *b)];
      ++rt[multi_stat(std::span<const DashedPattern>(right), *b)];
    }
  });
  Report r;
  const bool equal = lt == rt;
  r.body["collection"] = c.text;
  r.body["items"] = items;
  r.body["left"] = pattern_names(left);
  r.body["right"] = pattern_names(right);
  r.body["left_distribution"] = to_json(lt);
  r.body["right_distribution"] = to_json(rt);
  r.body["equal"] = equal;
  if (o.symmetric) r.body["symmetric"] = equal;
  std::vector<std::string> head{"side"};
  for (std::size_t i = 0; i < left.size(); ++i) head.push_back("p" + std::to_string(i + 1));
  head.emplace_back("count");
  r.csv.push_back(head);
  append_rows(r.csv, lt, "left");
  append_rows(r.csv, rt, "right");
  r.failed = !equal;
  return r;
}

template <class E, class Order>
Report class_report(std::span<const E> w, Order order, std::size_t cap) {
  const EquivClass<E> cls = equivalence_class(w, order, cap);
  Report r;
  json members = json::array();
  r.csv.push_back({"word", "des", "asc"});
  for (const auto& m : cls.members) {
    const std::span<const E> view(m);
    const IndexSet des = descent_set(view, order);
    const IndexSet asc = ascent_set(view, order);
    members.push_back({{"word", seq_json(m)}, {"des", to_json(des)}, {"asc", to_json(asc)}});
    r.csv.push_back({seq_json(m).template get<std::string>(), des.to_string(), asc.to_string()});
  }
  const auto des = setstat_distribution(cls, SetStat::kDes, order);
  const auto asc = setstat_distribution(cls, SetStat::kAsc, order);
  auto dist = [](const SetDistribution& d) {
    json rows = json::array();
    for (const auto& [set, count] : d) rows.push_back(json::array({to_json(set), count}));
    return rows;
  };
  r.body["generator"] = seq_json(cls.generator);
  r.body["size"] = cls.size();
  r.body["members"] = members;
  r.body["minimal"] = seq_json(extremal_word(cls, Extremal::kMinimal, order));
  r.body["maximal"] = seq_json(extremal_word(cls, Extremal::kMaximal, order));
  r.body["des_distribution"] = dist(des);
  r.body["asc_distribution"] = dist(asc);
  r.body["equidistributed"] = des == asc;
  r.failed = des != asc;
  return r;
}

Report cmd_class(const Options& o) {
  const Sequence seq = read_sequence(o.word, o.bword);
  if (seq.word) return class_report(std::span<const int>(seq.word->letters()), IntegerOrder{}, o.cap);
  return class_report(std::span<const Block>(seq.bword->blocks()), BlockOrder{}, o.cap);
}

Report cmd_theta(const Options& o) {
  const Sequence seq = read_sequence(o.word, o.bword);
  Report r;
  auto run = [&](auto input, auto order) {
    using E = typename decltype(input)::value_type;
    const std::span<const E> view(input);
    const auto out = theta(view, order);
    r.body["input"] = seq_json(input);
    r.body["output"] = seq_json(out);
    r.csv = {{"step", "prefix_length", "result"}};
    if (o.trace) {
      json steps = json::array();
      for (std::size_t len = 1; len <= input.size(); ++len) {
        const auto partial = theta(view.first(len), order);
        steps.push_back({{"prefix_length", len}, {"result", seq_json(partial)}});
        r.csv.push_back({std::to_string(len), std::to_string(len), seq_json(partial).template get<std::string>()});
      }
      r.body["trace"] = steps;
    } else {
      r.csv.push_back({"1", std::to_string(input.size()), seq_json(out).template get<std::string>()});
    }
  };
  if (seq.word) run(seq.word->letters(), IntegerOrder{});
  else run(seq.bword->blocks(), BlockOrder{});
  return r;
}

Report cmd_gamma(const Options& o) {
  const Sequence seq = read_sequence(o.word, o.bword);
  Report r;
  auto run = [&](auto input, auto order) {
    using E = typename decltype(input)::value_type;
    const std::span<const E> view(input);
    GammaTrace<E> trace;
    const auto out = o.inverse ? gamma_inverse(view, order, &trace) : gamma(view, order, &trace);
    const IndexSet s = o.inverse ? ascent_set(view, order) : descent_set(view, order);
    r.body["input"] = seq_json(input);
    r.body["output"] = seq_json(out);
    r.body["direction"] = o.inverse ? "inverse" : "forward";
    r.body["base_set"] = to_json(s);
    r.body["input_des"] = to_json(descent_set(view, order));
    r.body["input_asc"] = to_json(ascent_set(view, order));
    r.body["output_des"] = to_json(descent_set(std::span<const E>(out), order));
    r.body["output_asc"] = to_json(ascent_set(std::span<const E>(out), order));
    r.body["steps"] = trace.size();
    r.csv = {{"step", "op", "word", "marks"}};
    if (o.trace) {
      json steps = json::array();
      // Arrow notation: (w, T) --op--> (w', T') ...
      std::string text = "(" + seq_json(input).template get<std::string>() + ", " + s.to_string() + ")";
      for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& st = trace[i];
        const std::string w = seq_json(st.word).template get<std::string>();
        steps.push_back({{"op", st.op}, {"word", w}, {"marks", to_json(st.marks)}});
        text += " --" + st.op + "--> (" + w + ", " + st.marks.to_string() + ")";
        r.csv.push_back({std::to_string(i + 1), st.op, w, st.marks.to_string()});
      }
      r.body["trace"] = steps;
      r.body["trace_text"] = text;
    }
  };
  if (seq.word) run(seq.word->letters(), IntegerOrder{});
  else run(seq.bword->blocks(), BlockOrder{});
  return r;
}

Report cmd_epsilon(const Options& o) {
  if (o.word.empty() || !o.bword.empty()) throw UsageError("epsilon needs --word");
  const Word w = parse_word(o.word);
  EpsilonTrace trace;
  const Word out = epsilon(w, &trace);
  Report r;
  r.body["input"] = to_string(w);
  r.body["output"] = to_string(out);
  r.csv = {{"stage", "value"}, {"input", to_string(w)}};
  if (o.trace) {
    r.body["trace"] = {{"runs", to_string(trace.runs)},
                       {"theta", to_string(trace.maximal)},
                       {"reversed", to_string(trace.reversed)}};
    r.csv.push_back({"runs", to_string(trace.runs)});
    r.csv.push_back({"theta", to_string(trace.maximal)});
    r.csv.push_back({"reversed", to_string(trace.reversed)});
  }
  r.csv.push_back({"output", to_string(out)});
  return r;
}

json partition_json(const PartitionStats& s) {
  return {{"n", s.n},
          {"k", s.k},
          {"openers", to_json(s.openers)},
          {"closers", to_json(s.closers)},
          {"rsb", s.rsb},
          {"lsb", s.lsb},
          {"rsb_vector", s.rsb_vector},
          {"lsb_vector", s.lsb_vector},
          {"bdes", to_json(s.bdes)},
          {"basc", to_json(s.basc)},
          {"bmaj", s.bmaj},
          {"nbdes", s.nbdes},
          {"mak", s.mak},
          {"makp", s.makp},
          {"mil", s.mil},
          {"stat", s.stat}};
}

std::int64_t perm_stat(const PermStats& s, const std::string& name) {
  if (name == "des") return s.des;
  if (name == "maj") return s.maj;
  if (name == "mak") return s.mak;
  if (name == "makp") return s.makp;
  throw UnknownStatistic("unknown permutation statistic '" + name + "' (des, maj, mak, makp)");
}

Report cmd_stats(const Options& o, int threads) {
  const int given = !o.partition.empty() + !o.perm.empty() + !o.collection.empty();
  if (given != 1) throw UsageError("stats needs exactly one of --partition, --perm, --collection");
  Report r;
  if (!o.partition.empty()) {
    const PartitionStats s = partition_stats(parse_partition(o.partition));
    r.body = partition_json(s);
    r.body["partition"] = o.partition;
    r.csv.push_back({"statistic", "value"});
    for (const auto& [key, value] : r.body.items()) r.csv.push_back({key, value.dump()});
    return r;
  }
  if (!o.perm.empty()) {
    const Word w = parse_word(o.perm);
    const PermStats s = perm_stats(w);
    r.body = {{"perm", to_string(w)}, {"des", s.des}, {"maj", s.maj}, {"mak", s.mak}, {"makp", s.makp}};
    r.csv = {{"statistic", "value"},
             {"des", std::to_string(s.des)},
             {"maj", std::to_string(s.maj)},
             {"mak", std::to_string(s.mak)},
             {"makp", std::to_string(s.makp)}};
    return r;
  }
  if (o.stats.empty()) throw UsageError("stats --collection needs at least one --stat");
  const Collection c = parse_collection(o.collection);
  r.body["collection"] = c.text;
  DistributionTable table;
  std::vector<std::string> names;
  if (c.kind == "op") {
    const auto stats = partition_statistics(o.stats);
    for (const auto& s : stats) names.push_back(s.name);
    table = partition_distribution(c.params[0], c.params[1], stats, threads);
  } else if (c.kind == "perms" || c.kind == "fixedruns") {
    for (const auto& s : o.stats) names.push_back(normalize_statistic_name(s));
    for (const auto& s : names) perm_stat(PermStats{}, s);  // validate names up front
    for_each_member(c, [&](const Word* w, const BWord*) {
      const PermStats s = perm_stats(*w);
      StatKey key;
      for (const auto& name : names) key.emplace_back(perm_stat(s, name));
      ++table[key];
    });
  } else {
    throw UsageError("stats --collection supports op, perms and fixedruns");
  }
  r.body["statistics"] = names;
  r.body["distribution"] = to_json(table);
  r.csv.push_back(header({}, names));
  append_rows(r.csv, table);
  return r;
}

Report cmd_euler_mahonian(const Options& o, int threads) {
  if (o.n < 1 || o.n > 10) throw UsageError("euler-mahonian needs 1 <= --n <= 10");
  if (o.k < 0 || o.k > o.n) throw UsageError("--k must lie in 1..n");
  std::vector<std::string> names = o.stats;
  if (names.empty()) names = euler_mahonian_statistics();
  Report r;
  json reports = json::array();
  bool all = true;
  r.csv.push_back({"statistic", "n", "k", "value", "count", "target"});
  for (const auto& name : names) {
    for (int k = o.k == 0 ? 1 : o.k; k <= (o.k == 0 ? o.n : o.k); ++k) {
      const EulerMahonianReport em = check_euler_mahonian(name, o.n, k, threads);
      json dist = json::array();
      for (const auto& [v, c] : em.distribution) {
        dist.push_back(json::array({v, c}));
        r.csv.push_back({em.statistic, std::to_string(o.n), std::to_string(k), std::to_string(v), std::to_string(c),
                         std::to_string(v >= 0 ? em.target.coeff(static_cast<int>(v)) : 0)});
      }
      reports.push_back({{"statistic", em.statistic},
                         {"n", em.n},
                         {"k", em.k},
                         {"distribution", dist},
                         {"target", qpoly_json(em.target)},
                         {"target_polynomial", em.target.to_string()},
                         {"equal", em.equal}});
      all = all && em.equal;
    }
  }
  r.body["reports"] = reports;
  r.body["equal"] = all;
  r.failed = !all;
  return r;
}

Report cmd_conjecture(const Options& o, int threads) {
  if (o.n < 1 || o.n > 10) throw UsageError("conjecture needs 1 <= --n <= 10");
  const ConjectureReport c = check_conjecture(o.n, o.set_valued, threads);
  Report r;
  json rows = json::array();
  r.csv.push_back({"n", "k", "partitions", "equal"});
  for (const auto& row : c.rows) {
    json j = {{"k", row.k}, {"equal", row.equal}, {"partitions", row.partitions}};
    if (row.difference) {
      json key = json::array();
      for (const auto& v : row.difference->key) key.push_back(to_json(v));
      j["difference"] = {{"key", key}, {"mil_count", row.difference->left}, {"mak_count", row.difference->right}};
    }
    rows.push_back(j);
    r.csv.push_back({std::to_string(c.n), std::to_string(row.k), std::to_string(row.partitions),
                     row.equal ? "true" : "false"});
  }
  r.body["n"] = c.n;
  r.body["bdes"] = c.set_valued ? "set" : "cardinality";
  r.body["left"] = "(bDES, MIL+bMAJ)";
  r.body["right"] = "(bDES, MAK+bMAJ)";
  r.body["rows"] = rows;
  r.body["equal"] = c.all_equal;
  r.body["evidence_only"] = true;
  r.body["note"] = c.note;
  r.failed = !c.all_equal;
  return r;
}

Report cmd_symclass(const Options& o) {
  if (o.patterns.size() != 1) throw UsageError("symclass needs exactly one --pattern");
  const DashedPattern p = parse_pattern(o.patterns.front());
  const PatternClass cls = classify(p);
  Report r;
  r.body["pattern"] = to_string(p);
  r.body["class"] = pattern_names(symmetry_class(p));
  r.body["type"] = p.type();
  r.body["classification"] = {{"connected", cls.connected},
                              {"piecewise_decreasing", cls.piecewise_decreasing},
                              {"piecewise_increasing", cls.piecewise_increasing}};
  r.body["rev"] = to_string(transform_pattern(p, PatternTransform::kRev));
  r.body["rbar"] = to_string(transform_pattern(p, PatternTransform::kRbar));
  r.body["complement"] = to_string(transform_pattern(p, PatternTransform::kComplement));
  r.csv.push_back({"pattern"});
  for (const auto& q : symmetry_class(p)) r.csv.push_back({to_string(q)});
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Report& r, const std::string& command, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    Table table = r.csv;
    if (table.empty()) {
      table.push_back({"key", "value"});
      for (const auto& [key, value] : r.body.items()) table.push_back({key, value.dump()});
    }
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
      out << '\n';
    }
    return;
  }
  json body = r.body;
  body["schema"] = kSchema;
  body["command"] = command;
  out << body.dump(2) << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dashed-pattern statistics verification engine", "dashed"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  int threads = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", threads, "Worker threads (default: DASHED_THREADS or core count)")
      ->check(CLI::NonNegativeNumber);

  Options o;
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--word", o.word, "Word, e.g. \"2 4 1 3 5\"");
    sub->add_option("--bword", o.bword, "Block word, e.g. \"8 5 | 1 | 9 6 2\"");
  };

  auto* occ = app.add_subcommand("occ", "Count occurrences of dashed patterns");
  occ->add_option("--pattern", o.patterns, "Dashed pattern, e.g. \"1 - 2 3\" (repeatable)");
  add_seq(occ);
  occ->add_flag("--list", o.list, "Also list the occurrence position tuples");

  auto* wilf = app.add_subcommand("wilf", "Compare pattern-count distributions over a collection");
  wilf->add_option("--collection", o.collection,
                   "perms N | words L N | comps S A | op N K | runs M | fixedruns K N");
  wilf->add_option("--pattern", o.patterns, "Two patterns to compare");
  wilf->add_option("--left", o.left, "Left pattern tuple (repeatable)");
  wilf->add_option("--right", o.right, "Right pattern tuple (repeatable)");
  wilf->add_flag("--symmetric", o.symmetric, "Check that the joint distribution of two patterns is symmetric");

  auto* cls = app.add_subcommand("class", "Enumerate a partially commutative equivalence class");
  add_seq(cls);
  cls->add_option("--cap", o.cap, "Maximum class size");

  auto* th = app.add_subcommand("theta", "Maximal word of the class of a minimal word");
  add_seq(th);
  th->add_flag("--trace", o.trace, "Show the insertion steps");

  auto* gm = app.add_subcommand("gamma", "Descent-to-ascent bijection via the involution principle");
  add_seq(gm);
  gm->add_flag("--trace", o.trace, "Show the F/phi/psi step sequence");
  gm->add_flag("--inverse", o.inverse, "Apply the inverse map");

  auto* ep = app.add_subcommand("epsilon", "Descending-run transformation of a word");
  ep->add_option("--word", o.word, "Word");
  ep->add_flag("--trace", o.trace, "Show runs, theta and reversal");

  auto* st = app.add_subcommand("stats", "Partition/permutation statistics or their distribution");
  st->add_option("--partition", o.partition, "Ordered set partition, e.g. \"8 5 | 1 | 9 6 2 | 7 4 | 3\"");
  st->add_option("--perm", o.perm, "Permutation");
  st->add_option("--collection", o.collection, "op N K | perms N | fixedruns K N");
  st->add_option("--stat", o.stats, "Statistic name or linear combination (repeatable)");

  auto* em = app.add_subcommand("euler-mahonian", "Compare statistics with [k]_q! S_q(n,k)");
  em->add_option("--n", o.n, "Ground set size")->required();
  em->add_option("--k", o.k, "Number of blocks (default: all)");
  em->add_option("--stat", o.stats, "Statistic (default: all five)");

  auto* cj = app.add_subcommand("conjecture", "Compare (bDES, MIL+bMAJ) with (bDES, MAK+bMAJ)");
  cj->add_option("--n", o.n, "Ground set size")->required();
  cj->add_flag("--set-valued", o.set_valued, "Key on the bDES set instead of its size");

  auto* sym = app.add_subcommand("symclass", "Symmetry class and classification of a pattern");
  sym->add_option("--pattern", o.patterns, "Dashed pattern");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Report r;
    if (command == "occ") r = cmd_occ(o);
    else if (command == "wilf") r = cmd_wilf(o);
    else if (command == "class") r = cmd_class(o);
    else if (command == "theta") r = cmd_theta(o);
    else if (command == "gamma") r = cmd_gamma(o);
    else if (command == "epsilon") r = cmd_epsilon(o);
    else if (command == "stats") r = cmd_stats(o, threads);
    else if (command == "euler-mahonian") r = cmd_euler_mahonian(o, threads);
    else if (command == "conjecture") r = cmd_conjecture(o, threads);
    else r = cmd_symclass(o);
    emit(r, command, format, out);
    return r.failed ? kVerificationFailure : kOk;
  } catch (const UsageError& e) {
    err << "dashed " << command << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "dashed " << command << ": parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IterationCapExceeded& e) {
    err << "dashed " << command << ": internal consistency failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const NotUnique& e) {
    err << "dashed " << command << ": internal consistency failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const NotFound& e) {
    err << "dashed " << command << ": internal consistency failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "dashed " << command << ": " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace dashed::cli
