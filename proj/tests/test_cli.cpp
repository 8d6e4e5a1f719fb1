#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = dashed::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("occ") {
  const auto r = call({"occ", "--pattern", "1 - 2 3", "--word", "2 4 1 3 5"});
  REQUIRE(r.code == 0);
  const auto j = r.body();
  CHECK(j["schema"] == dashed::cli::kSchema);
  CHECK(j["count"] == 2);
  const auto b = call({"occ", "--pattern", "3 1 - 4 2 - 3", "--bword", "5 3 2 | 6 4 1 | 5 4"}).body();
  CHECK(b["count"] == 1);
  const auto listed = call({"occ", "--pattern", "1 - 2 3", "--word", "2 4 1 3 5", "--list"});
  CHECK(listed.out.find("occurrences") != std::string::npos);
}

TEST_CASE("keys are sorted and CSV is available") {
  const auto r = call({"stats", "--partition", "8 5 | 1 | 9 6 2 | 7 4 | 3"});
  REQUIRE(r.code == 0);
  const auto j = r.body();
  CHECK(j["rsb"] == 4);
  CHECK(j["lsb"] == 5);
  CHECK(j["bmaj"] == 5);
  CHECK(j["mil"] == 17);
  CHECK(j["stat"] == 19);
  CHECK(j["mak"] == 21);
  CHECK(j["makp"] == 14);
  CHECK(r.out.find("\"bdes\"") < r.out.find("\"schema\""));
  const auto csv = call({"--format", "csv", "occ", "--pattern", "2 - 3 1", "--word", "3 1 4 2"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "pattern,count\n2 - 3 1,1\n");
}

TEST_CASE("wilf") {
  auto j = call({"wilf", "--collection", "perms 5", "--pattern", "1 2 4 - 3", "--pattern", "4 2 1 - 3"}).body();
  CHECK(j["equal"] == true);
  CHECK(j["items"] == 120);
  const auto diff = call({"wilf", "--collection", "perms 4", "--pattern", "1 2", "--pattern", "1 - 2"});
  CHECK(diff.code == 1);
  CHECK(diff.body()["equal"] == false);
  CHECK(call({"wilf", "--collection", "comps 6 1,2,3", "--pattern", "1 2 - 2", "--pattern", "2 1 - 2"}).code == 0);
  CHECK(call({"wilf", "--collection", "words 5 3", "--pattern", "1 3 - 1 2", "--pattern", "1 2 - 1 3"}).code == 0);
  CHECK(call({"wilf", "--collection", "fixedruns 2 6", "--pattern", "2 - 3 1", "--pattern", "3 1 - 2", "--symmetric"}).code == 0);
  CHECK(call({"wilf", "--collection", "nonsense", "--pattern", "1", "--pattern", "1"}).code == 2);
}

TEST_CASE("monoid and bijection commands") {
  auto j = call({"class", "--bword", "6 5 3 | 2 1 | 3"}).body();
  CHECK(j["size"] == 3);
  j = call({"theta", "--bword", "3 1 | 5 4 2 | 7 6"}).body();
  CHECK(j["output"] == "7 6 | 3 1 | 5 4 2");
  j = call({"gamma", "--bword", "2 1 | 9 6 | 5 4 | 3 | 8 7", "--trace"}).body();
  CHECK(j["output"] == "9 6 | 3 | 5 4 | 8 7 | 2 1");
  CHECK(j["steps"] == 9);
  j = call({"gamma", "--inverse", "--bword", "9 6 | 3 | 5 4 | 8 7 | 2 1"}).body();
  CHECK(j["output"] == "2 1 | 9 6 | 5 4 | 3 | 8 7");
  j = call({"epsilon", "--word", "3 6 4 5 3 5 3 1 7 6", "--trace"}).body();
  CHECK(j["output"] == "5 3 1 5 3 3 7 6 6 4");
  CHECK(call({"theta", "--bword", "5 3 | 2 1"}).code == 2);
  j = call({"symclass", "--pattern", "2 - 3 1"}).body();
  CHECK(j["schema"] == dashed::cli::kSchema);
}

TEST_CASE("statistics commands") {
  auto r = call({"euler-mahonian", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.body()["equal"] == true);
  r = call({"conjecture", "--n", "4", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.body()["evidence_only"] == true);
  r = call({"stats", "--collection", "op 3 2", "--stat", "mak+bmaj"});
  CHECK(r.code == 0);
  r = call({"stats", "--perm", "1 8 5 9 6 2 3 7 4"});
  CHECK(r.body()["mak"] == 21);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"occ", "--pattern", "1 -- 2", "--word", "1 2"}).code == 2);
  CHECK(call({"occ", "--pattern", "1 - 3", "--word", "1 2"}).code == 2);
  CHECK(call({"euler-mahonian"}).code == 2);
  CHECK(call({"stats", "--collection", "op 3 2", "--stat", "nope"}).code == 2);
  CHECK(call({"--format", "xml", "symclass", "--pattern", "1"}).code == 2);
  const auto bad = call({"occ", "--pattern", "1 2", "--word", "2 x"});
  CHECK(bad.err.find("offset") != std::string::npos);
}

TEST_CASE("runs collection accepts a quoted multiset") {
  const auto r = call({"wilf", "--collection", "runs \"3 2 1 | 6 4 | 7 5\"", "--pattern", "1", "--pattern", "1"});
  CHECK(r.code == 0);
  CHECK(r.body()["items"] == 2);
}
