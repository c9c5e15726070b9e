#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"
#include "cubic_orbit/closed_form.hpp"

using namespace cubic_orbit;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args, std::optional<std::string> env = std::string{}) {
  std::ostringstream out;
  std::ostringstream err;
  if (env && env->empty()) env = std::to_string(kDefaultDigitBudget);
  const int code = cli::run(args, out, err, env);
  return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome o = call(args);
  REQUIRE(o.code == 0);
  return json::parse(o.out);
}

}  // namespace

TEST_CASE("classify") {
  const Outcome o = call({"classify", "-a", "1", "-b", "1", "-c", "1", "-d", "1"});
  CHECK(o.code == cli::kOk);
  CHECK(o.out.find("rank-deficient") != std::string::npos);
  const json j = call_json({"classify", "-a", "1", "-b", "1", "-c", "1", "-d", "-1"});
  CHECK(j["schema"] == "cubic-orbit/1");
  CHECK(j["case"] == "antitrace-distinct");
}

TEST_CASE("solve emits exact terms") {
  const json j = call_json({"solve", "-a", "2", "-b", "1", "-c", "1", "-d", "2", "--x0", "1", "--y0", "2", "-n", "2"});
  CHECK(j["x"] == "2080");
  CHECK(j["y"] == "2240");
  CHECK(j["case"] == "distinct");
  CHECK(j["trivial"]["member"] == false);
  CHECK(j["paths"]["closed_form"] == true);
  CHECK(j["paths"]["reconstruct"] == true);
  CHECK(j["paths"]["iterate"] == true);
}

TEST_CASE("solve in factored form") {
  const json j = call_json(
      {"solve", "-a", "1", "-b", "1", "-c", "1", "-d", "1", "--x0", "1", "--y0", "1", "-n", "2", "--factored"});
  CHECK(j["x"]["sign"] == 1);
  CHECK(j["x"]["terms"] == json::array({"2^4"}));
}

TEST_CASE("zeroset member") {
  const json j = call_json({"zeroset", "-a", "1", "-b", "1", "-c", "1", "-d", "-1", "--x0", "1", "--y0", "1"});
  CHECK(j["trivial"]["member"] == true);
  CHECK(j["trivial"]["witness"] == 1);
}

TEST_CASE("negative and fractional literals") {
  const json j = call_json({"power", "-a", "-1/2", "-b", "0.5", "-c", "-3", "-d", "1", "-n", "1"});
  CHECK(j["matrix"] == json::array({json::array({"-1/2", "1/2"}), json::array({"-3", "1"})}));
}

TEST_CASE("exit codes") {
  CHECK(call({"classify", "-a", "1"}).code == cli::kUsage);
  CHECK(call({"bogus"}).code == cli::kUsage);
  CHECK(call({"classify", "-a", "x", "-b", "1", "-c", "1", "-d", "1"}).code == cli::kUsage);
  CHECK(call({"zeroset", "-a", "0", "-b", "0", "-c", "1", "-d", "1", "--x0", "1", "--y0", "1"}).code ==
        cli::kDegenerate);
  const Outcome trivial = call({"solve", "-a", "1", "-b", "1", "-c", "1", "-d", "-1", "--x0", "1", "--y0", "1", "-n", "3"});
  CHECK(trivial.code == cli::kTrivial);
  CHECK(trivial.err.find("witness 1") != std::string::npos);
  CHECK(call({"iterate", "-a", "2", "-b", "1", "-c", "1", "-d", "2", "--x0", "1", "--y0", "2", "-n", "14"}).code ==
        cli::kBudget);
  CHECK(call({"zeroset", "-a", "1", "-b", "-2", "-c", "1", "-d", "1", "--x0", "1", "--y0", "1", "--horizon", "5"})
            .code == cli::kUnknown);
  CHECK(call({"classify", "-a", "1", "-b", "1", "-c", "1", "-d", "1", "--digit-budget", "10"}).code == cli::kUsage);
  CHECK(call({"zeroset", "-a", "1", "-b", "1", "-c", "1", "-d", "1", "--x0", "1", "--y0", "1", "--horizon", "0"})
            .code == cli::kUsage);
}

TEST_CASE("digit budget from the environment") {
  const std::vector<std::string> args{"iterate", "-a", "2", "-b", "1", "-c", "1", "-d", "2",
                                      "--x0",    "1",  "--y0", "2", "-n", "8"};
  CHECK(call(args, std::string("1000")).code == cli::kBudget);
  CHECK(call(args, std::string("100000")).code == cli::kOk);
  CHECK(call(args, std::string("garbage")).code == cli::kUsage);
  std::vector<std::string> flagged = args;
  flagged.insert(flagged.end(), {"--digit-budget", "100000"});
  CHECK(call(flagged, std::string("1000")).code == cli::kOk);
}

TEST_CASE("verify output") {
  const json j = call_json({"verify", "-a", "1", "-b", "1", "-c", "1", "-d", "-1", "--x0", "1", "--y0", "1", "-N", "4"});
  CHECK(j["agree"] == true);
  CHECK(j["N"] == 4);
  CHECK(j["rows"].size() == 5);
  CHECK(j["trivial"]["witness"] == 1);
  CHECK_FALSE(j.contains("first_divergence"));
}

TEST_CASE("json output is deterministic and free of nulls") {
  const std::vector<std::string> args{"verify", "-a", "3", "-b", "1", "-c", "-1", "-d", "1",
                                      "--x0",   "1",  "--y0", "2", "-N", "5", "--json"};
  const Outcome first = call(args);
  const Outcome second = call(args);
  CHECK(first.out == second.out);
  CHECK(first.out.find("null") == std::string::npos);
}

TEST_CASE("human output wraps nested objects") {
  const Outcome o = call({"verify", "-a", "1", "-b", "1", "-c", "1", "-d", "1", "--x0", "1", "--y0", "1", "-N", "1"});
  CHECK(o.code == 0);
  CHECK(o.out.find("paths={") != std::string::npos);
}
