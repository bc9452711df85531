#include <doctest.h>

#include <set>

#include "flopcheck/errors.hpp"
#include "flopcheck/report.hpp"

using namespace flopcheck;

TEST_CASE("empty report skeleton") {
  VerificationReport rep{"verify-all", "0.0.0", {}, {}};
  const auto j = nlohmann::json::parse(format_report(rep, ReportFormat::Json));
  CHECK(j["suite"] == "verify-all");
  CHECK(j["checks"].empty());
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK_FALSE(rep.has_failures());
}

TEST_CASE("status lines") {
  VerificationReport rep{"s", "v", {}, {}};
  rep.checks.push_back({"intersection-table", "", CheckStatus::Pass, "(E1'.l1')=-1"});
  rep.checks.push_back({"hom-compare", "", CheckStatus::Reported, "tables"});
  const std::string text = format_report(rep, ReportFormat::Text);
  CHECK(text.find("PASS intersection-table (E1'.l1')=-1\n") == 0);
  CHECK(text.find("\nREPORTED hom-compare tables\n") != std::string::npos);
  CHECK_FALSE(rep.has_failures());
  rep.checks.push_back({"x", "", CheckStatus::Fail, "broken"});
  CHECK(rep.has_failures());
  const auto j = nlohmann::json::parse(format_report(rep, ReportFormat::Json));
  CHECK(j["checks"][2]["status"] == "fail");
}

TEST_CASE("verify_all passes and is deterministic") {
  const SuiteParameters params{2, 4, 3};
  const VerificationReport a = verify_all(params);
  CHECK_FALSE(a.has_failures());
  std::set<std::string> ids;
  for (const auto& c : a.checks) {
    ids.insert(c.id);
    CHECK_MESSAGE(c.status != CheckStatus::Fail, c.id);
  }
  CHECK(ids.size() == a.checks.size());
  CHECK(ids.count("bott-anchor"));
  CHECK(ids.count("hom-compare"));
  const VerificationReport b = verify_all(params);
  CHECK(format_report(a, ReportFormat::Json) == format_report(b, ReportFormat::Json));
}

TEST_CASE("verify_all rejects unsupported parameters") {
  CHECK_THROWS_AS(verify_all({1, 4, 3}), DomainError);
  CHECK_THROWS_AS(verify_all({2, 3, 3}), DomainError);
  CHECK_THROWS_AS(verify_all({2, 4, -1}), DomainError);
}
