#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "psibound/cli.hpp"
#include "support.hpp"

using namespace psibound;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json row(const nlohmann::json& rows, const std::string& name) {
  for (const auto& r : rows) {
    if (r.value("name", "") == name) return r;
  }
  FAIL("no row " << name);
  return {};
}

// Restores PSIBOUND_PREC on scope exit.
struct EnvGuard {
  std::string saved;
  bool had;
  EnvGuard() {
    const char* v = std::getenv(cli::kPrecisionEnv);
    had = v != nullptr;
    if (had) saved = v;
  }
  ~EnvGuard() {
    if (had) {
      setenv(cli::kPrecisionEnv, saved.c_str(), 1);
    } else {
      unsetenv(cli::kPrecisionEnv);
    }
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("constants in every format") {
  const Run text = run({"constants"});
  CHECK(text.code == 0);
  CHECK(text.out.find("a0pp") != std::string::npos);

  const Run js = run({"--format", "json", "constants"});
  REQUIRE(js.code == 0);
  const auto rows = nlohmann::json::parse(js.out);
  const PrecisionContext ctx(50);
  ScopedPrecision guard(ctx);
  const Real a1 = (test::lit("8", ctx) / 21) + sqrt(test::lit("205", ctx)) / 35;
  CHECK(test::close_abs(test::lit(row(rows, "a1")["value"].get<std::string>().c_str(), ctx), a1, test::lit("1e-48", ctx)));
  CHECK(row(rows, "a0")["value"].get<std::string>().rfind("5.1296707140246", 0) == 0);

  const Run csv = run({"--format", "csv", "constants"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("name,value,", 0) == 0);
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args = {"--format", "csv", "gamma-table", "--n", "7,50"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("eval and bounds") {
  const Run e = run({"--format", "json", "eval", "--x", "1/2", "--a", "a1", "--order", "2"});
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out).size() >= 4);

  const Run b = run({"--format", "json", "--prec", "40", "bounds", "psi1", "--x", "0"});
  REQUIRE(b.code == 0);
  const auto rows = nlohmann::json::parse(b.out);
  const PrecisionContext ctx(40);
  ScopedPrecision guard(ctx);
  const Real hi = test::lit(row(rows, "hi")["value"].get<std::string>().c_str(), ctx);
  const Real pi2 = test::lit("3.141592653589793238462643383279502884197", ctx);
  CHECK(test::close_abs(hi, pi2 * pi2 / 6, test::lit("1e-38", ctx)));
  CHECK(row(rows, "oracle")["verdict"] == "PASS");

  CHECK(run({"bounds", "harmonic", "--n", "10", "--a", "1/2"}).code == 0);
}

TEST_CASE("order and certify") {
  const Run o = run({"--format", "json", "order", "--seq", "delta", "--n", "64"});
  REQUIRE(o.code == 0);
  const auto rows = nlohmann::json::parse(o.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["theoretical"] == 4);

  const Run c = run({"certify", "--source", "MT_Psi>L"});
  CHECK(c.code == 0);
  CHECK(c.out.find("7/7 claims passed") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval"}).code == 2);
  CHECK(run({"--format", "xml", "constants"}).code == 2);
  CHECK(run({"eval", "--x", "-2"}).code == 2);
  CHECK(run({"eval", "--x", "abc"}).code == 2);
  CHECK(run({"--prec", "5", "constants"}).code == 2);
  CHECK(run({"order", "--seq", "nope", "--n", "10"}).code == 2);
  CHECK(run({"bounds", "psi", "--x", "1", "--a", "0.6"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precision from the environment") {
  EnvGuard g;
  setenv(cli::kPrecisionEnv, "30", 1);
  const Run env = run({"--format", "json", "constants"});
  REQUIRE(env.code == 0);
  const std::string v30 = row(nlohmann::json::parse(env.out), "a0")["value"];
  CHECK(v30.size() < 40);

  const Run flag = run({"--prec", "60", "--format", "json", "constants"});
  REQUIRE(flag.code == 0);
  const std::string v60 = row(nlohmann::json::parse(flag.out), "a0")["value"];
  CHECK(v60.size() > 60);
  CHECK(v60.substr(0, 20) == v30.substr(0, 20));

  setenv(cli::kPrecisionEnv, "lots", 1);
  CHECK(run({"constants"}).code == 2);
}

}  // TEST_SUITE
