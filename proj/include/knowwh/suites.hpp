#ifndef KNOWWH_SUITES_HPP
#define KNOWWH_SUITES_HPP

#include <string>
#include <vector>

#include "knowwh/lab.hpp"

namespace knowwh {

// One axiom (or documented non-validity) checked over its frame class.
// subst_atoms lists the schema positions open to uniform substitution;
// positions like the atom in the announcement reduction axiom for atoms are
// excluded because those schemas do not admit substitution.
struct SuiteItem {
  enum class Gen { El, Ncl, Elkvr, Palkvr, Mlkv, Lkh };
  std::string name;
  std::string formula_text;
  FrameClass cls = FrameClass::Arbitrary;
  bool expect_valid = true;
  std::vector<std::string> subst_atoms;
  Gen gen = Gen::El;
};

struct Suite {
  std::string id;
  std::string title;
  std::vector<SuiteItem> items;
};

const std::vector<Suite>& all_suites();
const Suite* find_suite(const std::string& id);

struct ItemResult {
  std::string name;
  std::string formula_text;
  bool expect_valid = true;
  bool got_valid = false;
  bool ok = false;
  std::uint64_t models_examined = 0;
  std::optional<Countermodel> counter;
  int substitution_checks = 0;
};

struct SuiteReport {
  std::string suite;
  SearchBudget budget;
  std::vector<ItemResult> items;
  bool all_ok = true;
};

// Checks every item at the given budget. Valid items additionally get 20
// random substitution instances re-checked at a 2-world budget (seeded per
// item, so reports are reproducible byte for byte).
SuiteReport run_suite(const std::string& id, const SearchBudget& budget);

std::string report_text(const SuiteReport& r);
nlohmann::json report_json(const SuiteReport& r);

}  // namespace knowwh

#endif
