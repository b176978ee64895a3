#include <doctest.h>

#include "knowwh/eval.hpp"
#include "knowwh/model_json.hpp"
#include "knowwh/parse.hpp"
#include "knowwh/suites.hpp"

using namespace knowwh;

namespace {

SearchBudget quick() {
  SearchBudget b;
  b.max_worlds = 2;
  return b;
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(find_suite("s5") != nullptr);
  CHECK(find_suite("skh") != nullptr);
  CHECK(find_suite("nope") == nullptr);
  CHECK_THROWS(run_suite("nope", quick()));
  // seven axioms plus the two derived ones
  CHECK(find_suite("skh")->items.size() == 9);
}

TEST_CASE("small-budget runs of the light suites pass") {
  for (const char* id : {"s5", "sncl-arbitrary", "table1", "kw-reduction", "selkv",
                         "palkv-reduction", "smlkv"}) {
    SuiteReport r = run_suite(id, quick());
    INFO(report_text(r));
    CHECK(r.all_ok);
    for (const auto& item : r.items) CHECK(item.got_valid == item.expect_valid);
  }
}

TEST_CASE("skh passes at two states") {
  SuiteReport r = run_suite("skh", quick());
  INFO(report_text(r));
  CHECK(r.all_ok);
}

TEST_CASE("the non-validity suite produces countermodels that replay") {
  SuiteReport r = run_suite("nonvalid", quick());
  INFO(report_text(r));
  CHECK(r.all_ok);
  for (const auto& item : r.items) {
    CHECK(!item.got_valid);
    REQUIRE(item.counter.has_value());
    AnyModel m = model_from_json(item.counter->model);
    CHECK(!eval(m, item.counter->world, parse(item.formula_text)));
  }
}

TEST_CASE("reports are deterministic and machine-readable") {
  SuiteReport a = run_suite("sncl-arbitrary", quick());
  SuiteReport b = run_suite("sncl-arbitrary", quick());
  CHECK(report_text(a) == report_text(b));
  CHECK(report_json(a).dump() == report_json(b).dump());
  auto j = report_json(a);
  CHECK(j["suite"] == "sncl-arbitrary");
  CHECK(j["all_ok"] == true);
  for (const auto& item : j["items"]) {
    CHECK(item.contains("item"));
    CHECK(item.contains("status"));
    CHECK(item.contains("models_examined"));
  }
  // valid axioms get substitution spot-checks
  bool some_subst = false;
  for (const auto& item : a.items) some_subst |= item.substitution_checks == 20;
  CHECK(some_subst);
}
