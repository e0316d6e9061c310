#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "plethys/cli.hpp"
#include "plethys/io.hpp"
#include "plethys/symfunc.hpp"

using namespace plethys;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Spec file that removes itself when the test ends.
struct SpecFile {
  std::string path;
  SpecFile(const std::string& name, const std::string& text) : path(name) { std::ofstream(path) << text; }
  ~SpecFile() { std::remove(path.c_str()); }
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("expand ass") {
  const auto r = run({"expand", "ass", "--max-degree", "2"});
  REQUIRE(r.code == kExitOk);
  const auto f = symfunc_from_json(Json::parse(r.out));
  CHECK(f == power_sum(1, 2) + h_gen(2, 2));
  CHECK(r.out ==
        R"({"truncation":2,"terms":[{"partition":[1],"num":"1","den":"1"},)"
        R"({"partition":[1,1],"num":"1","den":"2"},{"partition":[2],"num":"1","den":"2"}]})"
        "\n");
  CHECK(run({"expand", "ass", "--max-degree", "2", "--format", "text"}).out == "p1 + 1/2*p1^2 + 1/2*p2\n");
}

TEST_CASE("expand dih") {
  const auto r = run({"expand", "dih", "--max-degree", "1", "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1/2*P1 + 1/2*Q1\n");
}

TEST_CASE("expand with specs") {
  SpecFile empty("plethys_cli_empty.json", "{}");
  const auto r = run({"expand", "b1", "--spec", empty.path, "--format", "text"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0\n");
  SpecFile tri("plethys_cli_tri.json", R"({"genus0": {"3": [[3]]}})");
  const auto tree = run({"expand", "tree", "--spec", tri.path, "--max-degree", "3"});
  CHECK(tree.code == kExitOk);
  const auto h2 = h_gen(2, 3);
  CHECK(symfunc_from_json(Json::parse(tree.out)) == power_sum(1, 3) + h2 + power_sum(1, 3) * h2);
  for (const char* what : {"cyclic-necklaces", "necklaces"}) {
    CHECK(run({"expand", what, "--spec", tri.path, "--max-degree", "3"}).code == kExitOk);
  }
}

TEST_CASE("verify") {
  CHECK(run({"verify", "bb", "--max-degree", "12"}).code == kExitOk);
  const auto neg = run({"verify", "negative-dih", "--max-degree", "4", "--format", "text"});
  CHECK(neg.code == kExitOk);
  CHECK(neg.out.rfind("negative-dih: PASS", 0) == 0);
  const auto thm = run({"verify", "theorem", "--max-degree", "4"});
  CHECK(thm.code == kExitOk);
  const auto j = Json::parse(thm.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("suites").at(0).at("suite") == "theorem");
}

TEST_CASE("verify detects a failing identity") {
  // With only trivial arity-3 modules the naive dihedral count agrees with the
  // necklace series at degree 1, so the negative control cannot fire.
  SpecFile tri("plethys_cli_neg.json", R"({"genus0": {"3": [[3]]}})");
  const auto r = run({"verify", "negative-dih", "--spec", tri.path, "--max-degree", "1"});
  CHECK(r.code == kExitIdentityFailure);
}

TEST_CASE("enumerate") {
  SpecFile tri("plethys_cli_enum.json", R"({"genus0": {"3": [[3]]}})");
  const auto neck = run({"enumerate", "necklace", "--n", "1", "--spec", tri.path});
  REQUIRE(neck.code == kExitOk);
  const auto neck_lines = lines(neck.out);
  REQUIRE(neck_lines.size() == 2);
  CHECK(Json::parse(neck_lines.back()) == Json::parse(R"({"family":"necklace","n":1,"classes":1})"));
  const auto tree = run({"enumerate", "rooted-tree", "--n", "2", "--spec", tri.path});
  CHECK(Json::parse(lines(tree.out).back()).at("classes") == 1);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"enumerate", "genus1-stable", "--n", "0"}).code == kExitInputError);
  CHECK(run({"enumerate", "blob", "--n", "1"}).code == kExitInputError);
  CHECK(run({"expand", "necklaces"}).code == kExitInputError);
  CHECK(run({"expand", "nothing"}).code == kExitInputError);
  CHECK(run({"verify", "bogus"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"expand", "ass", "--max-degree", "0"}).code == kExitInputError);
  CHECK(run({"expand", "ass", "--format", "xml"}).code == kExitInputError);
  SpecFile bad("plethys_cli_bad.json", R"({"genus0": {"2": [[2]]}})");
  const auto r = run({"expand", "b1", "--spec", bad.path});
  CHECK(r.code == kExitInputError);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"expand", "b1", "--spec", "missing-file.json"}).code == kExitInputError);
}

TEST_CASE("budget overruns exit 3") {
  CHECK(run({"enumerate", "necklace", "--n", "6", "--budget-half-edges", "14"}).code == kExitBudgetExceeded);
  CHECK(run({"enumerate", "genus1-stable", "--n", "3", "--budget-classes", "5"}).code == kExitBudgetExceeded);
  CHECK(run({"enumerate", "genus1-stable", "--n", "3", "--budget-legs", "2"}).code == kExitBudgetExceeded);
  CHECK(run({"verify", "theorem", "--max-degree", "3", "--budget-classes", "5"}).code == kExitBudgetExceeded);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"enumerate", "genus1-stable", "--n", "2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> exp{"expand", "dih", "--max-degree", "5"};
  CHECK(run(exp).out == run(exp).out);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == kExitOk); }
