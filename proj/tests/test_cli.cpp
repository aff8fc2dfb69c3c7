#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_gmk(const std::string& args) {
  std::string cmd = std::string("\"") + GMK_BINARY_DIR + "/gmk\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("growth table output") {
  RunResult r = run_gmk("growth --m 2 --k 2 --n-max 10");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["gr"][3] == 19);
  CHECK(doc["lengths"]["B2"][3] == 19);
  CHECK(doc["degree_estimate"].is_string());

  RunResult csv = run_gmk("growth --m 2 --k 2 --n-max 3 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.out.rfind("n,A1,A2,B1,B2,gr\n", 0) == 0);
}

TEST_CASE("abelianization output") {
  RunResult r = run_gmk("abelian --m 2 --k 2 --n 3");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["column_l1"].back() == 13);
  CHECK(doc["norms"]["sup"] == 6);
  CHECK(doc["jordan_profile"] == json::array({3, 1}));
  CHECK(doc["rank_m_minus_i"] == 2);
}

TEST_CASE("certificate output and lower bounds") {
  RunResult r = run_gmk("dehn --m 2 --k 2 --n 3");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["trivial"] == true);
  CHECK(doc["written_length"] == 30);
  CHECK(doc["word_length"] == 26);
  CHECK(doc["filling_exponent"] == 4);
  CHECK(doc["lower_bound_abelian"] == 117);
  CHECK(doc["lower_bound_exact"] >= 117);
}

TEST_CASE("wall report and the two-coloring assertion") {
  RunResult r = run_gmk("special --m 2 --cover");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["hyperplanes"] == 40);
  CHECK(doc["verdict"] == "SPECIAL");
  CHECK(doc["inter_osculations"].empty());

  CHECK(run_gmk("special --m 3 --base --assert-vh").exit_code == 1);
  CHECK(run_gmk("special --m 2 --base --assert-vh").exit_code == 0);
}

TEST_CASE("graph export") {
  RunResult r = run_gmk("cover --m 1 --emit dot");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("digraph cover {", 0) == 0);
  CHECK(r.out.find("label=\"a3\"") != std::string::npos);
  size_t arrows = 0;
  for (size_t pos = 0; (pos = r.out.find("->", pos)) != std::string::npos; ++pos) ++arrows;
  CHECK(arrows == 24);
}

TEST_CASE("point-action verification") {
  RunResult r = run_gmk("permrep --m 2 --verify");
  REQUIRE(r.exit_code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["points"] == 32);
  CHECK(doc["report"]["ok"] == true);
}

TEST_CASE("byte-identical reruns") {
  RunResult a1 = run_gmk("reproduce --only permrep");
  RunResult a2 = run_gmk("reproduce --only permrep");
  REQUIRE(a1.exit_code == 0);
  CHECK(a1.out == a2.out);
  CHECK(a1.out.rfind("PASS", 0) == 0);

  RunResult b1 = run_gmk("abelian --m 3 --k 2 --n 7");
  RunResult b2 = run_gmk("abelian --m 3 --k 2 --n 7");
  REQUIRE(b1.exit_code == 0);
  CHECK(b1.out == b2.out);
}

TEST_CASE("usage errors") {
  CHECK(run_gmk("growth --m 2 --k 2").exit_code == 2);      // missing --n-max
  CHECK(run_gmk("phi --m 2 --k 3").exit_code == 2);         // k > m
  CHECK(run_gmk("no-such-subcommand").exit_code == 2);
  CHECK(run_gmk("growth --m 2 --k 2 --n-max 99").exit_code == 2);  // out of range
}
