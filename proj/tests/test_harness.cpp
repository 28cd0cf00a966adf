#include <algorithm>
#include <set>

#include "doctest.h"
#include "emcg/harness.hpp"
#include "emcg/presentation.hpp"
#include "json.hpp"

using namespace emcg;

namespace {

HarnessConfig quick() {
  HarnessConfig c;
  c.search_ta0_witness = false;
  return c;
}

const CheckResult& find(const CheckResults& rs, const std::string& id) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.id == id; });
  REQUIRE_MESSAGE(it != rs.end(), "missing " << id);
  return *it;
}

bool all_pass_except(const CheckResults& rs, const std::set<std::string>& allowed) {
  for (const auto& r : rs) {
    if (allowed.count(r.id)) continue;
    if (r.status != CheckStatus::pass && r.status != CheckStatus::skipped) {
      MESSAGE(r.id << " " << to_string(r.status) << " " << r.witness.value_or(""));
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("lemma z at n = 6 includes (ab)^2 = s1 s4") {
    const auto rs = verify_lemma_z(6, quick());
    CHECK(find(rs, "n6.lemZ.power").status == CheckStatus::pass);
    CHECK(all_pass_except(rs, {}));
  }

  TEST_CASE("delta product at n = 8") {
    const auto rs = verify_lemma_z(8, quick());
    CHECK(find(rs, "n8.lemZ.dprod").status == CheckStatus::pass);
    CHECK(find(rs, "n8.lemZ.dshift.k1").status == CheckStatus::pass);
    CHECK(all_pass_except(rs, {}));
  }

  TEST_CASE("main suite at n = 6") {
    const auto rs = verify_main_even(6, quick());
    CHECK(find(rs, "n6.main.index").status == CheckStatus::pass);
    CHECK(find(rs, "n6.main.bridge").status == CheckStatus::pass);
    CHECK(find(rs, "n6.main.c.corrected").status == CheckStatus::pass);
    // The displayed value of c does not hold at n = 6 (it does at n = 8).
    CHECK(find(rs, "n6.main.c").status == CheckStatus::fail);
    CHECK(all_pass_except(rs, {"n6.main.c"}));
    CHECK(find(verify_main_even(8, quick()), "n8.main.c").status == CheckStatus::pass);
  }

  TEST_CASE("odd suite") {
    const auto rs = verify_odd(5, quick());
    CHECK(find(rs, "n5.odd.power").status == CheckStatus::pass);
    CHECK(find(rs, "n5.odd.index").status == CheckStatus::pass);
    CHECK(find(verify_odd(7, quick()), "n7.odd.order.ta0").witness == "order 14");
  }

  TEST_CASE("n4 and sigma2 suites") {
    const auto n4 = verify_n4(quick());
    CHECK(all_pass_except(n4, {}));
    CHECK(find(n4, "n4.two_periodic").status == CheckStatus::skipped);
    const auto s2 = verify_sigma2(quick());
    CHECK(all_pass_except(s2, {}));
    CHECK(find(s2, "sigma2.conclusion").status == CheckStatus::pass);
  }

  TEST_CASE("suite dispatch") {
    CHECK(parse_suite("lemma-y") == Suite::lemma_y);
    CHECK_THROWS_AS(parse_suite("lemma_y"), std::invalid_argument);
    CHECK_FALSE(suite_applies(Suite::lemma_y, 7));
    CHECK(suite_applies(Suite::odd, 7));
    CHECK(suite_applies(Suite::n4, 3));
    CHECK_FALSE(suite_uses_n(Suite::sigma2));
    CHECK_THROWS_AS(run_suite(Suite::odd, 6, quick()), std::invalid_argument);
  }

  TEST_CASE("full_report dispatch") {
    const Report r = full_report({5, 6, 7}, quick());
    std::set<std::string> ids;
    for (const auto& c : r.checks) ids.insert(c.id);
    CHECK(ids.size() == r.checks.size());
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const auto& x, const auto& y) { return x.id < y.id; }));
    CHECK(ids.count("n5.odd.index"));
    CHECK(ids.count("n6.main.index"));
    CHECK(ids.count("n7.odd.index"));
    CHECK(ids.count("n4.index"));
    CHECK(ids.count("sigma2.conclusion"));

    const Report empty = full_report({}, quick());
    for (const auto& c : empty.checks) {
      CHECK((c.id.rfind("n4.", 0) == 0 || c.id.rfind("sigma2.", 0) == 0));
    }

    const Report six = full_report({6}, quick());
    std::size_t at6 = 0;
    for (const auto& c : six.checks) at6 += c.id.rfind("n6.", 0) == 0;
    CHECK(at6 >= 60);
  }

  TEST_CASE("exit codes and overflow policy") {
    Report r;
    r.checks.push_back({"n6.x", "", CheckStatus::pass, std::nullopt, 0});
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"n8.main.index", "", CheckStatus::overflow, std::nullopt, 0});
    CHECK(overflow_tolerated(r.checks.back()));
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"n6.main.index", "", CheckStatus::overflow, std::nullopt, 0});
    CHECK_FALSE(overflow_tolerated(r.checks.back()));
    CHECK(r.exit_code() == 2);
    r.checks.push_back({"n6.y", "", CheckStatus::fail, std::nullopt, 0});
    CHECK(r.exit_code() == 1);
  }

  TEST_CASE("enumeration overflow is reported as overflow") {
    HarnessConfig tight = quick();
    tight.enumeration.max_cosets = 10;
    const auto rs = verify_main_even(6, tight);
    CHECK(find(rs, "n6.main.index").status == CheckStatus::overflow);
  }

  TEST_CASE("json report schema and determinism") {
    const Report r1 = make_report(verify_odd(5, quick()));
    const Report r2 = make_report(verify_odd(5, quick()));
    CHECK(to_json(r1, false) == to_json(r2, false));
    const auto doc = nlohmann::json::parse(to_json(r1));
    CHECK(doc["version"] == 1);
    REQUIRE(doc["checks"].is_array());
    for (const auto& c : doc["checks"]) {
      CHECK(c["id"].is_string());
      CHECK(c["statement"].is_string());
      const std::string s = c["status"];
      CHECK((s == "pass" || s == "fail" || s == "overflow" || s == "skipped"));
      CHECK((c["witness"].is_null() || c["witness"].is_string()));
      CHECK(c["millis"].is_number());
    }
    const std::string table = to_table(r1);
    CHECK(table.find("n5.odd.index") != std::string::npos);
    CHECK(table.find("checks:") != std::string::npos);
  }

  TEST_CASE("t a0 witness search is sound when it reports") {
    const auto found = find_ta0_witness(6, 4, 5000);
    if (found) {
      CHECK(equal_in_group(parse_expression(*found, 6), parse_expression("t a0", 6), 6));
    }
    // no word of length <= 2 in a, b equals t a0
    CHECK_FALSE(find_ta0_witness(6, 1, 10).has_value());
  }
}
