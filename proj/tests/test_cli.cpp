// Drives the built CLI binary end to end: output, exit codes, and the JSONL
// record contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "arflab/record.hpp"

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string output;
};

CmdResult run(const std::string& args) {
  const std::string command = std::string(ARFLAB_CLI_PATH) + " " + args + " 2>&1";
  CmdResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ns info") {
  const CmdResult ok = run("ns info --gens 3,7,8");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "{0, 3, 6, →}"));
  CHECK(contains(ok.output, "is_arf"));
  CHECK(contains(ok.output, "(3, 3, 1, …)"));

  const CmdResult naturals = run("ns info --gens 1");
  CHECK(naturals.exit_code == 0);
  CHECK(contains(naturals.output, "{0, →}"));
  CHECK(contains(naturals.output, "-1"));

  CHECK(run("ns info --gens 4,6").exit_code == 2);
  CHECK(run("ns info --gens nonsense").exit_code == 2);
  CHECK(run("ns info").exit_code == 2);

  const CmdResult js = run("ns info --gens 3,7,8 --json");
  CHECK(js.exit_code == 0);
  const auto j = nlohmann::json::parse(js.output);
  CHECK(j.at("conductor") == 6);
  CHECK(j.at("is_arf") == true);
  CHECK(j.at("multiplicity_sequence") == nlohmann::json({3, 3}));
}

TEST_CASE("dup modes and exit codes") {
  const CmdResult predicate = run("dup --gens 3,7,8 --ideal-gens 3,7,8 -m 3 --mode predicate");
  CHECK(predicate.exit_code == 0);
  CHECK(contains(predicate.output, "predicate"));
  CHECK(contains(predicate.output, "agreement"));

  const CmdResult compute = run("dup --gens 3,7,8 --ideal-gens 3,7,8 -m 3");
  CHECK(compute.exit_code == 0);
  CHECK(contains(compute.output, "{0, 6, 9, 12, 14, →}"));
  CHECK(contains(compute.output, "6, 9, 14, 16, 17, 19"));

  const CmdResult report =
      run("dup --gens 5,8,11,12,14 --ideal-gens 5,8,11,12,14 -m 5 --mode closure-report");
  CHECK(report.exit_code == 0);
  CHECK(contains(report.output, "equality"));
  CHECK(contains(report.output, "17"));

  CHECK(run("dup --gens 3,7,8 --ideal-gens 3,7,8 -m 4").exit_code == 2);
  CHECK(run("dup --gens 3,7,8 --ideal-gens 3,7,8 -m 5").exit_code == 2);
  CHECK(run("dup --gens 3,7,8 --ideal-gens 4 -m 3").exit_code == 2);

  const CmdResult js =
      run("dup --gens 5,8,11,12,14 --ideal-gens 5,8,11,12,14 -m 5 --mode predicate --json");
  CHECK(js.exit_code == 0);
  const auto j = nlohmann::json::parse(js.output);
  CHECK(j.at("predicate") == false);
  CHECK(j.at("oracle") == false);
  CHECK(j.at("reason") == "multiplicity-clause");
  CHECK(j.at("dup_conductor") == 24);
}

TEST_CASE("explore writes a parseable JSONL dataset") {
  const std::string path = "cli_explore_test.jsonl";
  const CmdResult result =
      run("explore --max-genus 4 --max-m 7 --out " + path);
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "inclusion violations 0"));

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  long long lines = 0, strict = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto j = nlohmann::json::parse(line);
    const arflab::ReportRecord record = arflab::report_record_from_json(j);
    CHECK(record.command == "explore");
    CHECK(to_json(record) == j);  // lossless round trip
    if (record.equality && !*record.equality) ++strict;
  }
  CHECK(lines > 0);
  const std::string counted = "explored " + std::to_string(lines) + " instances";
  CHECK(contains(result.output, counted));

  CHECK(run("explore --max-genus -1 --max-m 3 --out cli_explore_bad.jsonl").exit_code == 2);

  // empty bounds: an empty file and a clean exit
  const CmdResult empty = run("explore --max-genus 2 --max-m 0 --out cli_explore_empty.jsonl");
  CHECK(empty.exit_code == 0);
  CHECK(contains(empty.output, "explored 0 instances"));
  std::ifstream empty_in("cli_explore_empty.jsonl");
  REQUIRE(empty_in.good());
  CHECK(empty_in.peek() == std::ifstream::traits_type::eof());
}

TEST_CASE("explore surfaces the strict worked example") {
  const std::string path = "cli_explore_g7.jsonl";
  const CmdResult result =
      run("explore --max-genus 7 --max-m 5 --ideal-budget 5 --out " + path);
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "inclusion violations 0"));

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    const arflab::ReportRecord rec =
        arflab::report_record_from_json(nlohmann::json::parse(line));
    if (rec.sgens != std::vector<int>{5, 8, 11, 12, 14} || rec.m != 5) continue;
    if (rec.ideal_small != std::vector<int>{5, 8, 10, 11, 12, 13, 14}) continue;
    found = true;
    CHECK(rec.predicate == false);
    CHECK(rec.oracle == false);
    CHECK(rec.reason == "multiplicity-clause");
    CHECK(rec.equality == false);
    CHECK(rec.witness == 17);
    CHECK(rec.dup_conductor == 24);
  }
  CHECK(found);
}

TEST_CASE("val verify") {
  const CmdResult ex1 = run("val verify --gens 3,7,8 --ideal-gens 3,7,8 --b-exp 3 --bound 40");
  CHECK(ex1.exit_code == 0);
  CHECK(contains(ex1.output, "match"));
  CHECK(contains(ex1.output, "true"));

  const CmdResult trivial = run("val verify --gens 1 --ideal-gens 0 --b-exp 1 --bound 10");
  CHECK(trivial.exit_code == 0);

  const CmdResult ex2 =
      run("val verify --gens 5,8,11,12,14 --ideal-gens 5,8,11,12,14 --b-exp 5 --bound 48 --json");
  CHECK(ex2.exit_code == 0);
  const auto j = nlohmann::json::parse(ex2.output);
  CHECK(j.at("match") == true);
  CHECK(j.at("ring_arf") == false);
  CHECK(j.at("predicate") == false);

  CHECK(run("val verify --gens 3,7,8 --ideal-gens 3,7,8 --b-exp 4 --bound 40").exit_code == 2);
}
