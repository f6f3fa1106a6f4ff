#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

#include "cardguess/rational.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cardguess::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const auto r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("pmf C example and envelope") {
    const auto doc = invoke_json({"pmf", "C", "--m1", "2", "--m2", "1"});
    CHECK(doc["result"]["exact"] == json({{"2", "2/3"}, {"3", "1/3"}}));
    CHECK(doc["result"]["decimal"]["2"].get<double>() == 0.666666666667);
    CHECK(doc["command"] == "pmf C");
    CHECK(doc["metadata"].contains("version"));
    CHECK(doc["parameters"]["m1"] == "2");
  }

  TEST_CASE("exact strings round-trip") {
    const auto doc = invoke_json({"pmf", "joint", "--m1", "9", "--m2", "7"});
    cardguess::Rational total = 0;
    for (const auto& [key, value] : doc["result"]["exact"].items()) {
      const auto q = cardguess::parse_rational(value.get<std::string>());
      CHECK(cardguess::to_string(q) == value.get<std::string>());
      total += q;
    }
    CHECK(total == 1);
  }

  TEST_CASE("csv output has a header row") {
    const auto r = invoke({"--format", "csv", "pmf", "W", "--m1", "2", "--m2", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "W,exact,decimal\n1,1/3,0.333333333333\n2,2/3,0.666666666667\n");
  }

  TEST_CASE("output is byte-identical across invocations") {
    const std::vector<std::string> args{"simulate", "--m1", "5", "--m2", "3", "--trials",
                                        "2000", "--seed", "17", "--streams", "3"};
    CHECK(invoke(args).out == invoke(args).out);
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--threads", "2"});
    CHECK(invoke(args).out.size() > 0);
    CHECK(json::parse(invoke(threaded).out)["result"] == json::parse(invoke(args).out)["result"]);
  }

  TEST_CASE("seed metadata and environment default") {
    auto doc = invoke_json({"simulate", "--m1", "3", "--m2", "3", "--trials", "10", "--seed", "5"});
    CHECK(doc["metadata"]["seed"] == 5);
    CHECK(doc["result"]["invariants_held"] == true);
    ::setenv(cardguess::cli::kSeedEnvironmentVariable, "99", 1);
    doc = invoke_json({"simulate", "--m1", "3", "--m2", "3", "--trials", "10"});
    CHECK(doc["metadata"]["seed"] == 99);
    ::setenv(cardguess::cli::kSeedEnvironmentVariable, "nope", 1);
    CHECK(invoke({"simulate", "--m1", "3", "--m2", "3", "--trials", "10"}).code == 2);
    ::unsetenv(cardguess::cli::kSeedEnvironmentVariable);
  }

  TEST_CASE("cdf and moments") {
    auto doc = invoke_json({"cdf", "joint", "--m1", "2", "--m2", "1", "--k", "0", "--l", "2"});
    CHECK(doc["result"]["exact"] == "1/3");
    doc = invoke_json({"cdf", "one-sided", "--m1", "2", "--m2", "1", "--k", "1", "--l", "1"});
    CHECK(doc["result"]["exact"] == "2/3");
    doc = invoke_json({"moments", "--m1", "2", "--m2", "2", "--order", "2"});
    CHECK(doc["result"]["moments"][0]["factorial_Chat"]["exact"] == "5/6");
    CHECK(doc["result"]["moments"][1]["raw_Chat"]["exact"] == "7/6");
    CHECK(doc["result"]["moments"][0].contains("ratio"));
  }

  TEST_CASE("correlation commands") {
    auto doc = invoke_json({"correlate", "min"});
    CHECK(std::abs(doc["result"]["rho"].get<double>() - 0.269187) < 1e-5);
    CHECK(std::abs(doc["result"]["correlation"].get<double>() + 0.444039) < 1e-5);
    doc = invoke_json({"correlate", "curve", "--points", "101"});
    const auto& curve = doc["result"]["curve"];
    REQUIRE(curve.size() == 101);
    CHECK(curve[0]["correlation"] == 0.0);
    CHECK(curve[100]["correlation"] == 0.0);
    for (std::size_t i = 1; i < 100; ++i) CHECK(curve[i]["correlation"].get<double>() < 0.0);
  }

  TEST_CASE("limits") {
    auto doc = invoke_json({"limits", "law", "--regime", "T-linear", "--rho", "1", "--points", "5"});
    CHECK(doc["result"]["discrete"] == true);
    CHECK(doc["result"]["points"][0]["pmf"] == 0.5);
    doc = invoke_json({"limits", "law", "--regime", "joint-central", "--rho", "0.5", "--points", "3"});
    CHECK(doc["result"]["points"].size() == 9);
    doc = invoke_json({"limits", "distance", "--regime", "W-near-diagonal-small-d", "--m1",
                       "100,400", "--m2", "100,400", "--independence"});
    const auto& seq = doc["result"]["sequence"];
    REQUIRE(seq.size() == 2);
    CHECK(seq[1]["distance"].get<double>() < seq[0]["distance"].get<double>());
    CHECK(seq[1].contains("independence"));
    CHECK(invoke({"limits", "law", "--regime", "T-linear"}).code == 3);
    CHECK(invoke({"limits", "law", "--regime", "W-linear", "--rho", "1"}).code == 3);
    CHECK(invoke({"limits", "distance", "--regime", "W-sublinear", "--m1", "5,6", "--m2", "1"}).code == 2);
  }

  TEST_CASE("verify commands") {
    auto r = invoke({"verify", "oracles", "--max-total", "10"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["result"]["status"] == "all equal");
    r = invoke({"verify", "bijections", "--max-total", "8"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["result"]["status"] == "all equal");
    r = invoke({"verify", "local-limit", "--max-m", "20"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["result"]["lower_index_m_minus_2_agreements"].get<int>() < 20 * 19 / 2);
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"pmf", "Q", "--m1", "2", "--m2", "1"}).code == 2);
    CHECK(invoke({"pmf", "C", "--m1", "2"}).code == 2);
    CHECK(invoke({"pmf", "C", "--m1", "1", "--m2", "2"}).code == 3);
    CHECK(invoke({"cdf", "joint", "--m1", "2", "--m2", "1", "--k", "1", "--l", "2"}).code == 3);
    CHECK(invoke({"verify", "oracles", "--max-total", "21"}).code == 4);
    CHECK(invoke({"verify", "oracles", "--enum-cap", "30"}).code == 4);
    CHECK(invoke({"simulate", "--m1", "2", "--m2", "1", "--trials", "0"}).code == 3);
    CHECK(invoke({"--help"}).code == 0);
    const auto bad = invoke({"pmf", "C", "--m1", "1", "--m2", "2"});
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
  }
}
