#include <doctest.h>

#include <set>

#include "octolab/checks.hpp"

using namespace octolab;

TEST_CASE("glob_match") {
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("eq10.*", "eq10.torsion.antisymmetry"));
  CHECK_FALSE(glob_match("eq10.*", "eq12.closure.spin8"));
  CHECK(glob_match("*.torsion.*", "eq10.torsion.varies"));
  CHECK(glob_match("eq?.nilpotency", "eq3.nilpotency"));
  CHECK_FALSE(glob_match("eq?.nilpotency", "eq10.nilpotency"));
  CHECK(glob_match("", ""));
  CHECK_FALSE(glob_match("", "x"));
  CHECK(glob_match("a*b*c", "a-xx-b-yy-c"));
  CHECK_FALSE(glob_match("a*b*c", "a-xx-c"));
}

TEST_CASE("registry shape") {
  const auto& reg = check_registry();
  CHECK(reg.size() >= 40);

  std::set<std::string> ids;
  std::set<std::string> modules;
  for (const auto& rc : reg) {
    CHECK_FALSE(rc.id.empty());
    CHECK_FALSE(rc.paper_ref.empty());
    CHECK_FALSE(rc.module.empty());
    CHECK(ids.insert(rc.id).second);  // ids are unique
    modules.insert(rc.module);
  }
  // every module contributes checks
  const std::set<std::string> expected{"algebra-core", "xproduct",   "liegen",
                                       "calibrations", "roots-dims", "heisenberg"};
  CHECK(modules == expected);

  // deterministic ordering: module blocks in rank order, ids sorted inside
  std::vector<std::string> rank{"algebra-core", "xproduct",   "liegen",
                                "calibrations", "roots-dims", "heisenberg"};
  auto rank_of = [&](const std::string& m) {
    return std::find(rank.begin(), rank.end(), m) - rank.begin();
  };
  for (std::size_t i = 1; i < reg.size(); ++i) {
    const auto ra = rank_of(reg[i - 1].module), rb = rank_of(reg[i].module);
    CHECK(ra <= rb);
    if (ra == rb) CHECK(reg[i - 1].id < reg[i].id);
  }
}

TEST_CASE("selection filtering") {
  const auto rep = run_verification("eq10.*");
  CHECK(rep.checks.size() == 3);
  for (const auto& c : rep.checks) {
    CHECK(c.id.rfind("eq10.", 0) == 0);
    CHECK(c.paper_ref == "Eq. 10");
    CHECK(c.status == CheckStatus::Pass);
  }
  CHECK(run_verification("no.such.check").checks.empty());
}

TEST_CASE("report serialization") {
  const auto rep = run_verification("eq3.nilpotency");
  REQUIRE(rep.checks.size() == 1);
  const Json j = rep.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["check"] == "eq3.nilpotency");
  CHECK(j["checks"][0]["paper_ref"] == "Eq. 3");
  CHECK(j["checks"][0]["module"] == "heisenberg");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["witness"]["triples_checked"] == 24 * 24 * 24);
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 0);

  const std::string text = rep.to_text();
  CHECK(text.find("pass eq3.nilpotency Eq. 3") != std::string::npos);
  CHECK(text.find("summary: 1 pass, 0 fail, 0 discrepancy, 0 indeterminate") != std::string::npos);
  CHECK_FALSE(rep.failed());
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = run_verification("alg.*");
  const auto b = run_verification("alg.*");
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("status spectrum of the quick roots-dims checks") {
  // the two known dimension mismatches surface as discrepancy, never as fail
  const auto rep = run_verification("eq26.*");
  REQUIRE(rep.checks.size() == 4);
  std::map<std::string, std::string> status;
  for (const auto& c : rep.checks) status[c.id] = status_name(c.status);
  CHECK(status["eq26.row.spin5"] == "pass");
  CHECK(status["eq26.row.su3"] == "pass");
  CHECK(status["eq26.row.su2"] == "discrepancy");
  CHECK(status["eq26.row.u1"] == "discrepancy");
  CHECK_FALSE(rep.failed());

  const auto blocks = run_verification("sec5.block.*");
  REQUIRE(blocks.checks.size() == 3);
  for (const auto& c : blocks.checks) status[c.id] = status_name(c.status);
  CHECK(status["sec5.block.su3"] == "indeterminate");
  CHECK(status["sec5.block.su2"] == "indeterminate");
  CHECK(status["sec5.block.u1"] == "pass");
  CHECK_FALSE(blocks.failed());
}
