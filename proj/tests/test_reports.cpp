#include "baskakov/reports.hpp"

#include <sstream>

#include "doctest.h"
#include "json.hpp"

using namespace baskakov;

namespace {

std::vector<InequalityReport> sample_reports() {
  InequalityReport r;
  r.check_id = "norm";
  r.function_id = "weird,\"id\"";
  r.n = 4;
  r.left = 1.0;
  r.right = 2.0;
  r.slack = 1e-7;
  r.verdict = Verdict::pass;
  r.extra.emplace_back("ratio", 0.5);
  return {r};
}

}  // namespace

TEST_CASE("csv quoting follows RFC 4180") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("inequality csv is deterministic and carries the echo header") {
  RunEcho echo;
  echo.add("subcommand", "norm");
  echo.add("seed", "7");
  std::ostringstream a, b;
  write_inequality_csv(a, sample_reports(), echo);
  write_inequality_csv(b, sample_reports(), echo);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# subcommand=norm\n") != std::string::npos);
  CHECK(a.str().find("# seed=7\n") != std::string::npos);
  CHECK(a.str().find("\"weird,\"\"id\"\"\"") != std::string::npos);
  CHECK(a.str().find(",pass,") != std::string::npos);
}

TEST_CASE("json documents parse back and carry config") {
  RunEcho echo;
  echo.add("subcommand", "norm");
  std::ostringstream os;
  write_inequality_json(os, sample_reports(), echo);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["config"]["subcommand"] == "norm");
  REQUIRE(doc["reports"].size() == 1);
  CHECK(doc["reports"][0]["check"] == "norm");
  CHECK(doc["reports"][0]["verdict"] == "pass");
  CHECK(doc["reports"][0]["extra"]["ratio"] == 0.5);
}

TEST_CASE("convergence csv emits empty bound when none is known") {
  ConvergenceReport rep;
  rep.function_id = "exp-decay";
  rep.kind = OperatorKind::modified;
  rep.slope = -1.9;
  ConvergenceRow row;
  row.n = 8;
  row.error = 1e-3;
  row.bound = std::numeric_limits<double>::quiet_NaN();
  rep.rows.push_back(row);
  std::ostringstream os;
  write_convergence_csv(os, {rep}, RunEcho{});
  CHECK(os.str().find("exp-decay,modified,8,0.001,,") != std::string::npos);
}
