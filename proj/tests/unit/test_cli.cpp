#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/job.hpp"
#include "fixtures.hpp"
#include "nll/groebner.hpp"
#include "nll/jumping.hpp"
#include "nll/lefschetz.hpp"
#include "nll/version.hpp"
#include "oracles.hpp"

using namespace nll;
using namespace nll::cli;

namespace {

JobSpec parse(std::initializer_list<const char*> args, const char* env = nullptr) {
  std::vector<const char*> argv{"lefschetz-locus"};
  argv.insert(argv.end(), args.begin(), args.end());
  return parse_command_line(static_cast<int>(argv.size()), argv.data(), env);
}

struct Process {
  int status = -1;
  std::string out;
};

Process execute(const std::string& args) {
  Process p;
  const std::string cmd = std::string(NLL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

std::filesystem::path scratch(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "nll_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << content;
  return path;
}

std::vector<std::size_t> series_values(const oracle::Series& s, int from, int to) {
  std::vector<std::size_t> out;
  for (int t = from; t <= to; ++t) out.push_back(static_cast<std::size_t>(s[static_cast<std::size_t>(t)]));
  return out;
}

}  // namespace

TEST_CASE("command line parsing") {
  const JobSpec s = parse({"hilbert", "--a", "2,2,3", "--b", "0", "--seed", "7"});
  CHECK(s.command == "hilbert");
  CHECK(s.a == std::vector<int>{2, 2, 3});
  CHECK(s.b == std::vector<int>{0});
  CHECK(s.seed == 7);
  CHECK(s.prime == 65521);
  CHECK(s.degrees().d() == 7);

  CHECK(parse({"hilbert", "--a", "2,2,3", "--b", "0"}, "101").prime == 101);
  CHECK(parse({"hilbert", "--a", "2,2,3", "--b", "0", "--prime", "103"}, "101").prime == 103);

  CHECK_THROWS_AS(parse({"hilbert", "--a", "2,2,3"}), UsageError);
  CHECK_THROWS_AS(parse({"hilbert", "--a", "2,x,3", "--b", "0"}), UsageError);
  CHECK_THROWS_AS(parse({"frobnicate", "--a", "2,2,3", "--b", "0"}), UsageError);
  CHECK_THROWS_AS(parse({"line", "--a", "2,2,3", "--b", "0"}), UsageError);
  CHECK_THROWS_AS(parse({"line", "--a", "2,2,3", "--b", "0", "--line", "0,0,0"}), UsageError);
  CHECK_THROWS_AS(parse({"line", "--a", "2,2,3", "--b", "0", "--line", "1,2"}), UsageError);
  CHECK_THROWS_AS(parse({"--help"}), UsageError);

  const JobSpec survey = parse({"survey", "--random-n2", "5", "--monomial"});
  CHECK(survey.grid.random_n2 == 5);
  CHECK(survey.grid.include_monomial);
}

TEST_CASE("job files") {
  const auto job = scratch("job.json", R"({"a": [2, 2, 3], "b": [0], "seed": 9})");
  const JobSpec s = parse({"hilbert", "--job", job.c_str()});
  CHECK(s.a == std::vector<int>{2, 2, 3});
  CHECK(s.seed == 9);
  CHECK(parse({"hilbert", "--job", job.c_str(), "--seed", "4"}).seed == 4);

  JobSpec t;
  apply_job_document(R"({"a": [3,4,4], "b": [0], "matrix": [["x1^3", "x2^4", "x3^4"]]})", t);
  REQUIRE(t.matrix.has_value());
  CHECK((*t.matrix)[0][1] == "x2^4");
  CHECK_THROWS_AS(apply_job_document("[1, 2]", t), UsageError);
  CHECK_THROWS_AS(parse_matrix_document(R"([["x1", 3]])"), UsageError);
}

TEST_CASE("hilbert report") {
  const auto r = run(parse({"hilbert", "--a", "2,2,3", "--b", "0", "--seed", "7"}));
  CHECK(r.exit_code == 0);
  CHECK(r.report["hilbert"] == Json::parse("[1,3,4,3,1]"));
  CHECK(r.report["socle"] == Json::parse("[4]"));
  CHECK(r.report["tool"] == "lefschetz-locus");
  CHECK(r.report["version"] == std::string(kVersion));
  CHECK(r.report["seed"] == 7);
  CHECK(r.report["prime"] == 65521);
  CHECK(r.report["degrees"]["d"] == 7);
  for (const auto& c : r.report["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c["passed"].get<bool>());
  }
}

TEST_CASE("hilbert report for an explicit monomial matrix") {
  const auto file = scratch("mono.json", R"([["x1^3", "x2^4", "x3^4"]])");
  const auto r = run(parse({"hilbert", "--a", "3,4,4", "--b", "0", "--matrix", file.c_str()}));
  CHECK(r.exit_code == 0);
  CHECK(r.report["phi"]["source"] == "explicit");
  const auto want = series_values(oracle::complete_intersection_series({3, 4, 4}, 16), 0, 8);
  CHECK(r.report["hilbert"].get<std::vector<std::size_t>>() == want);
}

TEST_CASE("locus reports") {
  const auto a = run(parse({"locus", "--a", "2,2,3", "--b", "0"}));
  CHECK(a.exit_code == 0);
  CHECK(a.report["codim"] == 2);
  CHECK(a.report["degree"] == 6);
  CHECK(a.report["verdict"] == "match");

  const auto b = run(parse({"locus", "--a", "2,2,2", "--b", "0"}));
  CHECK(b.report["codim"] == 1);
  CHECK(b.report["degree"] == 3);

  const auto file = scratch("mono.json", R"([["x1^3", "x2^4", "x3^4"]])");
  const auto c = run(parse({"locus", "--a", "3,4,4", "--b", "0", "--matrix", file.c_str()}));
  CHECK(c.exit_code == 2);
  CHECK(c.report["codim"] == 1);
  CHECK(c.report["expected"] == 2);
  CHECK(c.report["verdict"] == "generality-required");
}

TEST_CASE("line reports") {
  const auto generic = run(parse({"line", "--a", "2,2,3", "--b", "0", "--line", "3,-7,11"}));
  CHECK(generic.exit_code == 0);
  CHECK(generic.report["lefschetz"] == true);
  CHECK(generic.report["jumping"] == false);

  // a rational point of the six-point locus; scan seeds until one has one
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto m = draw_generic_module(fixtures::ci(2, 2, 3), seed).module;
    const auto gb = buchberger(locus_ideal_at(m, 1).generators, m.field(), Ring::Dual);
    const auto pts = sample_locus_points(gb, measure(gb), 1, 1).points;
    if (pts.empty()) continue;
    const auto& F = m.field();
    const std::string coords = std::to_string(F.to_signed(pts[0][0])) + "," + std::to_string(F.to_signed(pts[0][1])) +
                               "," + std::to_string(F.to_signed(pts[0][2]));
    const std::string s = std::to_string(seed);
    const auto special =
        run(parse({"line", "--a", "2,2,3", "--b", "0", "--seed", s.c_str(), "--line", coords.c_str()}));
    CAPTURE(seed);
    CHECK(special.exit_code == 0);
    CHECK(special.report["lefschetz"] == false);
    CHECK(special.report["jumping"] == true);
    return;
  }
  FAIL("no seed in 1..40 gave a rational locus point");
}

TEST_CASE("survey") {
  const auto r = run(parse({"survey", "--monomial", "--workers", "4"}));
  CHECK(r.report["summary"]["total"] == 11);
  CHECK(r.report["summary"]["match"] == 10);
  CHECK(r.report["summary"]["generality-required"] == 1);
  CHECK(r.exit_code == 2);
  CHECK(r.report["fixtures"].back()["verdict"] == "generality-required");

  const auto n2 = run(parse({"survey", "--min-degree", "2", "--max-degree", "2", "--random-n2", "4"}));
  CHECK(n2.exit_code == 0);
  CHECK(n2.report["summary"]["claims"]["wlp"]["failed"] == 0);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  const auto one = run(parse({"survey", "--random-n2", "2", "--workers", "1"})).report.dump();
  const auto many = run(parse({"survey", "--random-n2", "2", "--workers", "6"})).report.dump();
  CHECK(one == many);
  const auto x = execute("locus --a 2,2,3 --b 0 --seed 3");
  const auto y = execute("locus --a 2,2,3 --b 0 --seed 3");
  CHECK(x.out == y.out);
  CHECK_FALSE(x.out.empty());
}

TEST_CASE("exit codes") {
  CHECK(execute("hilbert --a 2,2,3 --b 0").status == 0);
  CHECK(execute("hilbert --a 2,2,3").status == 1);
  CHECK(execute("line --a 2,2,3 --b 0 --line 0,0,0").status == 1);
  CHECK(execute("hilbert --a 2,2,3 --b 0 --prime 100").status == 1);
  const auto file = scratch("mono.json", R"([["x1^3", "x2^4", "x3^4"]])");
  CHECK(execute("locus --a 3,4,4 --b 0 --matrix " + file.string()).status == 2);
  const auto bad = execute("hilbert --a 2,2,3 --b 0 --prime 100");
  CHECK(Json::parse(bad.out).contains("error"));
}
