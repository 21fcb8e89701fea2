#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

const std::string kCli = EMPTYBOX_CLI_PATH;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cmd(const std::string& shell_command) {
  RunResult r;
  FILE* pipe = popen((shell_command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

RunResult run(const std::string& args) {
  return run_cmd("\"" + kCli + "\" " + args);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << content;
}

}  // namespace

TEST_CASE("find-box reports a certificated box above its guarantee") {
  const RunResult r = run("find-box --generate hammersley --n 64 --d 8");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 64);
  CHECK(j["d"] == 8);
  CHECK(j["box"]["lo"].size() == 8);
  CHECK(j["box"]["hi"].size() == 8);
  CHECK(j["volume"].get<double>() == j["box"]["volume"].get<double>());
  CHECK(j["volume"].get<double>() >= j["guarantee"].get<double>() - 1e-12);
  const std::string kind = j["certificate_case"].get<std::string>();
  CHECK((kind == "ZERO_VECTOR" || kind == "ONES_VECTOR" ||
         kind == "DUPLICATE_PAIR" || kind == "WHOLE_SLAB"));
  CHECK(j["slab"]["points_inside"].get<int>() <= j["slab"]["ell"].get<int>());
}

TEST_CASE("find-box on an empty set returns the whole cube") {
  write_file("/tmp/emptybox_cli_empty.csv", "# d=2 n=0\n");
  const RunResult r = run("find-box --input /tmp/emptybox_cli_empty.csv");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["volume"] == 1.0);
  CHECK(j["certificate_case"] == "WHOLE_SLAB");
}

TEST_CASE("find-box output is deterministic") {
  const std::string args = "find-box --generate random --n 200 --d 16 --seed 9";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("randomized generators require an explicit seed") {
  CHECK(run("find-box --generate random --n 10 --d 2").status == 2);
  CHECK(run("find-box --generate random --n 10 --d 2 --seed 7").status == 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("find-box --no-such-flag").status == 2);
  CHECK(run("find-box --input a.csv --generate grid --side 2").status == 2);
  CHECK(run("generate --n 4 --d 2").status == 2);
  CHECK(run("oracle --generate grid --d 2").status == 2);
  CHECK(run("partitions construct-optimal").status == 2);
  CHECK(run("partitions random --a 2 --t 2 --n 20 --k 4").status == 2);
}

TEST_CASE("domain errors exit with code 1") {
  CHECK(run("find-box --input /nonexistent/pts.csv").status == 1);
  CHECK(run("partitions construct-optimal --n 3").status == 1);
  CHECK(run("bounds volume-lower --n 4 --d 1").status == 1);
}

TEST_CASE("oracle matches the known Hammersley volumes") {
  const RunResult r4 = run("oracle --generate hammersley --n 4 --d 2");
  REQUIRE(r4.status == 0);
  CHECK(json::parse(r4.out)["volume"] == 0.375);
  const RunResult r16 = run("oracle --generate hammersley --n 16 --d 2");
  REQUIRE(r16.status == 0);
  const double v16 = json::parse(r16.out)["volume"].get<double>();
  CHECK(v16 == 0.15234375);
  CHECK(v16 * 16 < 4.0);
}

TEST_CASE("oracle reads points from stdin") {
  const RunResult r =
      run_cmd("printf '0.5,0.5\\n' | \"" + kCli + "\" oracle --input -");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["volume"] == 0.5);
}

TEST_CASE("oracle honors the budget from flag and environment") {
  // candidate count for the 8-point Hammersley set is 1296
  CHECK(run("oracle --generate hammersley --n 8 --d 2 --budget 10").status ==
        1);
  CHECK(run_cmd("EMPTYBOX_BUDGET=10 \"" + kCli +
                "\" oracle --generate hammersley --n 8 --d 2")
            .status == 1);
  // an explicit flag overrides the environment
  const RunResult r = run_cmd("EMPTYBOX_BUDGET=10 \"" + kCli +
                              "\" oracle --generate hammersley --n 8 --d 2 "
                              "--budget 1e7");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["volume"] == 0.25);
}

TEST_CASE("generate emits exact CSV and feeds back in") {
  const RunResult r = run("generate --generate hammersley --n 4 --d 2");
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        "# d=2 n=4\n# generator=hammersley n=4\n"
        "0,0\n0.25,0.5\n0.5,0.25\n0.75,0.75\n");

  const std::string file = "/tmp/emptybox_cli_grid.csv";
  REQUIRE(run("generate --generate grid --side 2 --d 2 --output " + file)
              .status == 0);
  const RunResult back = run("find-box --input " + file);
  REQUIRE(back.status == 0);
  const json j = json::parse(back.out);
  CHECK(j["n"] == 4);
  CHECK(j["d"] == 2);
  CHECK(j["volume"].get<double>() >= j["guarantee"].get<double>() - 1e-12);
}

TEST_CASE("partitions p --exact reproduces the small table") {
  const RunResult r = run("partitions p --a 2 --t 2 --n 5 --exact");
  REQUIRE(r.status == 0);
  CHECK(r.out == "{\"a\":2,\"n\":5,\"p\":4,\"t\":2}\n");
  CHECK(run("--format text partitions p --a 2 --t 2 --n 5 --exact").out ==
        "p(2,2,5) = 4\n");
  // the global flag is accepted after the subcommand too
  CHECK(run("partitions p --a 2 --t 2 --n 5 --exact --format text").out ==
        "p(2,2,5) = 4\n");
}

TEST_CASE("partitions p without --exact prints the sandwich") {
  const RunResult r = run("partitions p --a 3 --t 2 --n 12");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["lower"] == "3");
  CHECK(j["upper"] == "82");
  CHECK(j["b"] == 3);
  CHECK(j["k"] == 2);
  CHECK_FALSE(j["lower_formula"].get<std::string>().empty());
  CHECK_FALSE(j["upper_formula"].get<std::string>().empty());
}

TEST_CASE("partitions construct-optimal prints the canonical family") {
  const RunResult text =
      run("--format text partitions construct-optimal --n 4");
  REQUIRE(text.status == 0);
  CHECK(text.out == "1,2|3,4\n1,3|2,4\n1,4|2,3\n");
  const RunResult js = run("partitions construct-optimal --n 4");
  REQUIRE(js.status == 0);
  CHECK(js.out ==
        "{\"a\":2,\"n\":4,\"partitions\":"
        "[\"1,2|3,4\",\"1,3|2,4\",\"1,4|2,3\"],\"size\":3}\n");
}

TEST_CASE("partitions construct-block emits the 3x12 family") {
  const RunResult r = run("partitions construct-block --a 3 --n 12");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["a"] == 3);
  CHECK(j["n"] == 12);
  CHECK(j["size"] == 3);
  CHECK(j["partitions"] ==
        json({"1,2,5,6|3,4,9,10|7,8,11,12", "1,3,5,7|2,4,9,11|6,8,10,12",
              "1,4,5,8|2,3,9,12|6,7,10,11"}));
}

TEST_CASE("partitions verify accepts both input syntaxes") {
  write_file("/tmp/emptybox_cli_vec.txt", "0011\n0101\n0110\n");
  const RunResult vec =
      run("partitions verify --input /tmp/emptybox_cli_vec.txt");
  REQUIRE(vec.status == 0);
  CHECK(vec.out == "{\"a\":2,\"is_perfect\":true,\"k\":3,\"n\":4,\"t\":2}\n");

  write_file("/tmp/emptybox_cli_part.txt", "1,2|3,4\n1,3|2,4\n1,4|2,3\n");
  const RunResult part =
      run("partitions verify --input /tmp/emptybox_cli_part.txt");
  REQUIRE(part.status == 0);
  CHECK(json::parse(part.out)["is_perfect"] == true);

  const RunResult stdin_run = run_cmd(
      "printf '0011\\n0101\\n0110\\n' | \"" + kCli +
      "\" partitions verify --input -");
  REQUIRE(stdin_run.status == 0);
  CHECK(json::parse(stdin_run.out)["is_perfect"] == true);
}

TEST_CASE("partitions verify reports a witness with 1-based lines") {
  write_file("/tmp/emptybox_cli_bad.txt", "0011\n0101\n0110\n1001\n");
  const RunResult r =
      run("partitions verify --input /tmp/emptybox_cli_bad.txt");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["is_perfect"] == false);
  CHECK(j["witness"]["vectors"] == json({3, 4}));
  CHECK(j["witness"]["alpha"] == "00");
}

TEST_CASE("partitions random succeeds and fails with honest exit codes") {
  const RunResult ok =
      run("partitions random --a 2 --t 2 --n 20 --k 4 --seed 1");
  REQUIRE(ok.status == 0);
  const json j = json::parse(ok.out);
  CHECK(j["succeeded"] == true);
  CHECK(j["attempts"].get<int>() >= 1);
  CHECK(j["vectors"].size() == 4);
  CHECK(j["vectors"][0].get<std::string>().size() == 20);

  // k=6 exceeds the maximum 3 for n=4, so every draw fails
  const RunResult fail = run(
      "partitions random --a 2 --t 2 --n 4 --k 6 --seed 0 --max-attempts 2");
  CHECK(fail.status == 1);
  const json f = json::parse(fail.out);
  CHECK(f["succeeded"] == false);
  CHECK(f["attempts"] == 2);
  CHECK(f.contains("last_witness"));
}

TEST_CASE("partitions lym sums the verified family") {
  write_file("/tmp/emptybox_cli_lym.txt", "1,2|3,4\n1,3|2,4\n1,4|2,3\n");
  const RunResult r = run("partitions lym --input /tmp/emptybox_cli_lym.txt");
  REQUIRE(r.status == 0);
  CHECK(r.out == "{\"a\":2,\"members\":3,\"n\":4,\"sum\":1.0}\n");

  // a family that is not pairwise properly overlapping is refused
  write_file("/tmp/emptybox_cli_lym_bad.txt", "1,2|3,4\n1,2,3|4\n");
  CHECK(run("partitions lym --input /tmp/emptybox_cli_lym_bad.txt").status ==
        1);
}

TEST_CASE("bounds subcommands print the closed forms") {
  const RunResult vl = run("bounds volume-lower --n 4 --d 2");
  REQUIRE(vl.status == 0);
  CHECK(vl.out == "{\"bound\":0.05,\"d\":2,\"n\":4}\n");
  CHECK(run("--format text bounds volume-lower --n 4 --d 2").out == "0.05\n");

  const RunResult vu = run("bounds volume-upper --d 3");
  REQUIRE(vu.status == 0);
  CHECK(vu.out == "{\"constant\":\"24\",\"d\":3}\n");
  CHECK(run("--format text bounds volume-upper --d 3").out == "24\n");

  const RunResult ps = run("bounds p-sandwich --a 2 --t 2 --n 5");
  REQUIRE(ps.status == 0);
  const json j = json::parse(ps.out);
  CHECK(j["lower"] == "3");
  CHECK(j["upper"] == "4");
}

TEST_CASE("bounds table1 lists the four asymptotic rows") {
  const RunResult r = run("bounds table1");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["a"] == 2);
  CHECK(j["rows"][0]["lambda2"] == 2.0);
  CHECK(j["rows"][1]["a"] == 3);
  CHECK(j["rows"][1]["lambda2"].get<double>() ==
        doctest::Approx(1.89).epsilon(0.01));
  CHECK(j["rows"][3]["a"] == 10);
  CHECK(j["rows"][3]["lambda2"].get<double>() ==
        doctest::Approx(1.39).epsilon(0.01));

  const RunResult text = run("--format text bounds table1");
  REQUIRE(text.status == 0);
  CHECK(text.out.rfind("a   block_base  lambda1    lambda2\n", 0) == 0);
}

TEST_CASE("bench prints a csv timing sweep") {
  const RunResult r = run("bench --n 1000,2000 --d 4 --seed 3 --repeats 1");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("n,d,millis\n", 0) == 0);
  CHECK(r.out.find("1000,4,") != std::string::npos);
  CHECK(r.out.find("2000,4,") != std::string::npos);
}
