#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "schubcalc/cli.hpp"
#include "schubcalc/polynomial.hpp"
#include "schubcalc/serialize.hpp"

using namespace schubcalc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({}).code == cli::kInputError);
  CHECK(call({"bogus"}).code == cli::kInputError);
  CHECK(call({"--help"}).code == cli::kOk);
  CHECK(call({"perm", "--perm", "2,1"}).code == cli::kOk);

  const auto bad = call({"perm", "--perm", "1,1"});
  CHECK(bad.code == cli::kInputError);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());

  CHECK(call({"schubert", "--perm", "3,x"}).code == cli::kInputError);
  CHECK(call({"monk", "--k", "0", "--perm", "2,1"}).code == cli::kInputError);
  CHECK(call({"chains", "--perm", "3,1,2", "--labels", "1,1", "--order", "2,1"}).code ==
        cli::kInputError);
  CHECK(call({"verify", "cauchy", "--m", "0", "--p", "1"}).code == cli::kInputError);
  CHECK(call({"perm", "--perm", "3,2,1", "--support", "2"}).code == cli::kInputError);
  CHECK(call({"schubert", "--perm", "2,1", "--format", "xml"}).code == cli::kInputError);
}

TEST_CASE("polynomial output") {
  CHECK(call({"schubert", "--perm", "3,2,1"}).out == "x1^2*x2\n");
  CHECK(call({"schubert", "--perm", "3,2,1", "--oracle"}).out == "x1^2*x2\n");
  CHECK(call({"schubert", "--perm", "1"}).out == "1\n");
  CHECK(call({"dual", "--perm", "3,1,2"}).out == "1/2*x1^2 - x1*x3 - 1/2*x2^2 + x2*x3\n");
  CHECK(call({"dual", "--perm", "3,1,2", "--labeled"}).out == call({"dual", "--perm", "3,1,2"}).out);
  CHECK(call({"dual", "--perm", "2,1", "--perm3", "3,1,2"}).out == "x1 - x3\n");

  const auto json = call({"schubert", "--perm", "3,1,2", "--format", "json"});
  REQUIRE(json.code == cli::kOk);
  const auto j = Json::parse(json.out);
  CHECK(j["schema"] == 1);
  CHECK(Polynomial::parse(j["polynomial"].get<std::string>()) == Polynomial::parse("x1^2"));
}

TEST_CASE("text output re-parses") {
  for (const char* w : {"2,1", "3,1,2", "2,4,1,3", "4,3,2,1", "1,4,2,3"}) {
    for (const char* cmd : {"schubert", "dual"}) {
      const auto text = call({cmd, "--perm", w}).out;
      REQUIRE(!text.empty());
      const auto body = text.substr(0, text.size() - 1);
      REQUIRE(Polynomial::parse(body).to_string() == body);
    }
  }
}

TEST_CASE("counts and coefficients") {
  const auto chains = call({"chains", "--perm", "3,2,1"});
  CHECK(chains.code == cli::kOk);
  CHECK(chains.out.find("count: 4\n") != std::string::npos);
  CHECK(call({"lr", "--perm", "2,1", "--perm2", "2,1", "--perm3", "3,1,2"}).out == "1\n");
  CHECK(call({"lr", "--perm", "2,1", "--perm2", "2,1", "--perm3", "2,3,1"}).out == "0\n");
  const auto monk = call({"monk", "--k", "2", "--perm", "2,1"});
  CHECK(monk.code == cli::kOk);
  CHECK(monk.out.find("target: 2,3,1\ntarget: 3,1,2\n") != std::string::npos);
}

TEST_CASE("verify subcommands") {
  const auto duality = call({"verify", "duality", "--n", "4", "--format", "json"});
  REQUIRE(duality.code == cli::kOk);
  const auto j = Json::parse(duality.out);
  CHECK(j["pass"] == true);
  CHECK(j["pairs"] == 576);
  CHECK(j["check"] == "duality");

  CHECK(call({"verify", "cauchy", "--m", "2", "--p", "3"}).code == cli::kOk);
  CHECK(call({"verify", "chain-symmetry", "--perm", "2,1", "--perm3", "3,1,2", "--labels", "2"})
            .code == cli::kOk);
  CHECK(call({"verify", "label-permutation", "--perm", "2,4,1,3", "--labels", "1,2,3"}).code ==
        cli::kOk);
  CHECK(call({"verify", "increasing", "--perm", "2,1"}).code == cli::kOk);

  const auto inc = call({"verify", "increasing", "--perm", "3,1,2", "--format", "json"});
  CHECK(inc.code == cli::kCheckFailed);
  const auto ji = Json::parse(inc.out);
  CHECK(ji["pass"] == false);
  CHECK(ji["equal"]["chain_sum=dual"] == true);
  CHECK(ji["equal"]["bar_dual=chain_sum"] == false);

  const auto text = call({"verify", "duality", "--n", "3"});
  CHECK(text.out == "duality n=3 pairs=36 failures=0\npass\n");
}

TEST_CASE("insert and inverse insert") {
  const auto fwd = call({"insert", "--indices", "1,1", "--labels", "1,1", "--format", "json"});
  REQUIRE(fwd.code == cli::kOk);
  const auto j = Json::parse(fwd.out);
  CHECK(j["target"] == Json::array({3, 1, 2}));

  const std::string path = "cli_insert_roundtrip.json";
  {
    std::ofstream f(path);
    f << fwd.out;
  }
  const auto back = call({"insert", "--inverse", path});
  std::remove(path.c_str());
  CHECK(back.code == cli::kOk);
  CHECK(back.out == "indices: 1,1\nlabels: 1,1\n");

  CHECK(call({"insert", "--indices", "2", "--labels", "1"}).code == cli::kInputError);
  CHECK(call({"insert", "--inverse", "no/such/file.json"}).code == cli::kInputError);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "duality", "--n", "3", "--format", "json"},
      {"verify", "cauchy", "--m", "2", "--p", "2", "--format", "json"},
      {"chains", "--perm", "2,4,1,3", "--format", "json"},
      {"monk", "--k", "2", "--perm", "1,3,2", "--format", "json"},
  };
  for (const auto& c : commands) REQUIRE(call(c).out == call(c).out);
}
