#include "dashed/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <thread>

#include "dashed/errors.hpp"

namespace dashed {

namespace {

using Scalar = std::int64_t (*)(const PartitionStats&);
using SetValued = IndexSet (*)(const PartitionStats&);

struct ScalarEntry {
  const char* name;
  Scalar fn;
};

struct SetEntry {
  const char* name;
  SetValued fn;
};

constexpr ScalarEntry kScalars[] = {
    {"rsb", [](const PartitionStats& s) { return s.rsb; }},
    {"lsb", [](const PartitionStats& s) { return s.lsb; }},
    {"bmaj", [](const PartitionStats& s) { return s.bmaj; }},
    {"mak", [](const PartitionStats& s) { return s.mak; }},
    {"makp", [](const PartitionStats& s) { return s.makp; }},
    {"mil", [](const PartitionStats& s) { return s.mil; }},
    {"stat", [](const PartitionStats& s) { return s.stat; }},
    {"nbdes", [](const PartitionStats& s) { return s.nbdes; }},
    {"|bdes|", [](const PartitionStats& s) { return static_cast<std::int64_t>(s.bdes.size()); }},
    {"|basc|", [](const PartitionStats& s) { return static_cast<std::int64_t>(s.basc.size()); }},
    {"n", [](const PartitionStats& s) { return static_cast<std::int64_t>(s.n); }},
    {"k", [](const PartitionStats& s) { return static_cast<std::int64_t>(s.k); }},
    {"k(k-1)", [](const PartitionStats& s) { return static_cast<std::int64_t>(s.k) * (s.k - 1); }},
};

constexpr SetEntry kSets[] = {
    {"bdes", [](const PartitionStats& s) { return s.bdes; }},
    {"basc", [](const PartitionStats& s) { return s.basc; }},
    {"open", [](const PartitionStats& s) { return s.openers; }},
    {"clos", [](const PartitionStats& s) { return s.closers; }},
};

const ScalarEntry* find_scalar(std::string_view name) {
  for (const auto& e : kScalars) {
    if (name == e.name) return &e;
  }
  return nullptr;
}

const SetEntry* find_set(std::string_view name) {
  for (const auto& e : kSets) {
    if (name == e.name) return &e;
  }
  return nullptr;
}

struct Term {
  std::int64_t coeff;
  Scalar fn;
};

// Splits "a+2*b-c" into signed terms; '+'/'-' inside parentheses do not split.
std::vector<Term> parse_linear(const std::string& name) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < name.size()) {
    std::int64_t sign = 1;
    if (name[pos] == '+' || name[pos] == '-') {
      if (name[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw UnknownStatistic("malformed statistic '" + name + "'");
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < name.size() && (depth > 0 || (name[end] != '+' && name[end] != '-'))) {
      if (name[end] == '(') ++depth;
      if (name[end] == ')') --depth;
      ++end;
    }
    std::string term = name.substr(pos, end - pos);
    std::int64_t coeff = 1;
    if (const auto star = term.find('*'); star != std::string::npos) {
      const std::string digits = term.substr(0, star);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
        throw UnknownStatistic("malformed coefficient in '" + name + "'");
      }
      coeff = std::stoll(digits);
      term = term.substr(star + 1);
    }
    const ScalarEntry* entry = find_scalar(term);
    if (entry == nullptr) throw UnknownStatistic("unknown statistic '" + term + "' in '" + name + "'");
    terms.push_back({sign * coeff, entry->fn});
    pos = end;
  }
  if (terms.empty()) throw UnknownStatistic("empty statistic name");
  return terms;
}

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size())) {
    s.replace(at, from.size(), to);
  }
}

}  // namespace

std::string to_string(const StatValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<IndexSet>(v).to_string();
}

std::string to_string(const StatKey& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(key[i]);
  }
  return out + ")";
}

void merge_into(DistributionTable& into, const DistributionTable& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

std::string normalize_statistic_name(std::string_view name) {
  std::string s(name);
  replace_all(s, "′", "p");  // prime
  replace_all(s, "−", "-");  // minus sign
  std::string out;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    out += c == '\'' ? 'p' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

PartitionStatistic partition_statistic(std::string_view name) {
  std::string norm = normalize_statistic_name(name);
  if (const SetEntry* e = find_set(norm)) {
    const SetValued fn = e->fn;
    return {norm, true, [fn](const PartitionStats& s) { return StatValue(fn(s)); }};
  }
  if (const ScalarEntry* e = find_scalar(norm)) {
    const Scalar fn = e->fn;
    return {norm, false, [fn](const PartitionStats& s) { return StatValue(fn(s)); }};
  }
  std::vector<Term> terms = parse_linear(norm);
  return {norm, false, [terms = std::move(terms)](const PartitionStats& s) {
            std::int64_t total = 0;
            for (const Term& t : terms) total += t.coeff * t.fn(s);
            return StatValue(total);
          }};
}

std::vector<PartitionStatistic> partition_statistics(const std::vector<std::string>& names) {
  std::vector<PartitionStatistic> out;
  out.reserve(names.size());
  for (const auto& name : names) out.push_back(partition_statistic(name));
  return out;
}

std::vector<std::string> partition_statistic_names() {
  std::vector<std::string> out;
  for (const auto& e : kScalars) out.emplace_back(e.name);
  for (const auto& e : kSets) out.emplace_back(e.name);
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("DASHED_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 1024));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<DistributionTable> partition_distributions(int n, int k,
                                                       const std::vector<std::vector<PartitionStatistic>>& groups,
                                                       int threads) {
  std::vector<DistributionTable> result(groups.size());
  if (n < 1 || k < 1 || k > n) return result;
  if (threads <= 0) threads = default_threads();

  // Split the assignment-word stream on a prefix long enough to give every
  // worker several chunks.
  int length = 0;
  std::vector<std::vector<int>> chunks{{}};
  while (length < n && chunks.size() < static_cast<std::size_t>(threads) * 8) {
    ++length;
    chunks = OrderedSetPartitionStream::prefixes(n, k, length);
  }
  threads = std::max(1, std::min(threads, static_cast<int>(chunks.size())));

  std::atomic<std::size_t> next{0};
  std::vector<std::vector<DistributionTable>> local(static_cast<std::size_t>(threads),
                                                    std::vector<DistributionTable>(groups.size()));
  auto work = [&](std::size_t t) {
    auto& tables = local[t];
    StatKey key;
    for (std::size_t c = next++; c < chunks.size(); c = next++) {
      OrderedSetPartitionStream stream(n, k, chunks[c]);
      while (auto p = stream.next()) {
        const PartitionStats s = partition_stats(*p);
        for (std::size_t g = 0; g < groups.size(); ++g) {
          key.clear();
          for (const auto& stat : groups[g]) key.push_back(stat.eval(s));
          ++tables[g][key];
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
  }
  for (auto& tables : local) {
    for (std::size_t g = 0; g < groups.size(); ++g) merge_into(result[g], tables[g]);
  }
  return result;
}

DistributionTable partition_distribution(int n, int k, const std::vector<PartitionStatistic>& stats, int threads) {
  return std::move(partition_distributions(n, k, {stats}, threads).front());
}

std::optional<Difference> first_difference(const DistributionTable& left, const DistributionTable& right) {
  auto l = left.begin();
  auto r = right.begin();
  while (l != left.end() || r != right.end()) {
    if (r == right.end() || (l != left.end() && l->first < r->first)) return Difference{l->first, l->second, 0};
    if (l == left.end() || r->first < l->first) return Difference{r->first, 0, r->second};
    if (l->second != r->second) return Difference{l->first, l->second, r->second};
    ++l;
    ++r;
  }
  return std::nullopt;
}

DistributionTable permute_keys(const DistributionTable& table, const std::vector<std::size_t>& order) {
  DistributionTable out;
  for (const auto& [key, count] : table) {
    StatKey permuted;
    permuted.reserve(order.size());
    for (std::size_t i : order) permuted.push_back(key.at(i));
    out[permuted] += count;
  }
  return out;
}

const std::vector<std::string>& euler_mahonian_statistics() {
  static const std::vector<std::string> names{"mak+bmaj", "makp+bmaj", "mil+bmaj", "lsb-bmaj+k(k-1)", "stat"};
  return names;
}

EulerMahonianReport check_euler_mahonian(std::string_view statistic, int n, int k, int threads) {
  const std::string norm = normalize_statistic_name(statistic);
  const auto& known = euler_mahonian_statistics();
  if (std::find(known.begin(), known.end(), norm) == known.end()) {
    throw UnknownStatistic("not an Euler-Mahonian battery statistic: '" + std::string(statistic) + "'");
  }
  EulerMahonianReport report;
  report.statistic = norm;
  report.n = n;
  report.k = k;
  report.target = em_target(n, k);
  for (const auto& [key, count] : partition_distribution(n, k, {partition_statistic(norm)}, threads)) {
    report.distribution[std::get<std::int64_t>(key.front())] += count;
  }
  report.equal = true;
  std::size_t matched = 0;
  for (const auto& [value, count] : report.distribution) {
    if (value < 0 || value > report.target.degree() ||
        report.target.coeff(static_cast<int>(value)) != static_cast<std::int64_t>(count)) {
      report.equal = false;
    }
    ++matched;
  }
  std::size_t nonzero = 0;
  for (std::int64_t c : report.target.coeffs()) nonzero += c != 0 ? 1 : 0;
  if (matched != nonzero) report.equal = false;
  return report;
}

ConjectureReport check_conjecture(int n, bool set_valued, int threads) {
  ConjectureReport report;
  report.n = n;
  report.set_valued = set_valued;
  report.all_equal = true;
  const PartitionStatistic des = partition_statistic(set_valued ? "bdes" : "|bdes|");
  const std::vector<std::vector<PartitionStatistic>> groups{{des, partition_statistic("mil+bmaj")},
                                                            {des, partition_statistic("mak+bmaj")}};
  for (int k = 1; k <= n; ++k) {
    const auto tables = partition_distributions(n, k, groups, threads);
    ConjectureRow row;
    row.k = k;
    for (const auto& [key, count] : tables[0]) row.partitions += count;
    row.difference = first_difference(tables[0], tables[1]);
    row.equal = !row.difference.has_value();
    report.all_equal = report.all_equal && row.equal;
    report.rows.push_back(std::move(row));
  }
  report.note = report.all_equal
                    ? "distributions agree for every k at this n; this is computational evidence, not a proof"
                    : "distributions differ for some k: counterexample to the conjecture";
  return report;
}

}  // namespace dashed
