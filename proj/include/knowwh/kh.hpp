#ifndef KNOWWH_KH_HPP
#define KNOWWH_KH_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "knowwh/formula.hpp"
#include "knowwh/model.hpp"

namespace knowwh {

// An action sequence, possibly empty.
using Plan = std::vector<std::string>;

class NotExecutable : public std::runtime_error {
public:
  NotExecutable(Plan prefix, std::string witness_state);
  const Plan& prefix() const { return prefix_; }
  const std::string& witness_state() const { return witness_state_; }

private:
  Plan prefix_;
  std::string witness_state_;
};

// The empty plan is strongly executable everywhere.
bool strongly_executable(const LtsModel& m, const std::string& state, const Plan& plan);

// All states reachable by running `plan` from any state in `from`. Throws
// NotExecutable with the failing prefix and a witness state if some state
// along the way lacks a successor for the next action.
std::set<std::string> execute(const LtsModel& m, const std::set<std::string>& from,
                              const Plan& plan);

struct KhResult {
  bool holds = false;
  std::optional<Plan> witness;  // shortest, ties broken by action order
};

// Kh(pre, goal): is there one plan that is strongly executable at every
// pre-state and whose runs all end in goal-states? Searched breadth-first
// over belief states; an empty pre-set yields (true, empty plan).
KhResult eval_kh(const LtsModel& m, const Formula& pre, const Formula& goal);

bool eval_u(const LtsModel& m, const Formula& f);

// Truth of an L_Kh formula at a state; Kh subformulas are world-independent
// and evaluated innermost-out.
bool eval_lts(const LtsModel& m, const std::string& state, const Formula& f);

}  // namespace knowwh

#endif
