#ifndef KNOWWH_TESTS_ORACLE_HPP
#define KNOWWH_TESTS_ORACLE_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "knowwh/kh.hpp"
#include "knowwh/model.hpp"

namespace oracle {

// Independent oracle for Kh: depth-first enumeration of action sequences,
// pruning prefixes that are not strongly executable somewhere or that
// revisit a belief state on their own path (a plan whose belief trajectory
// loops can be shortened without changing the per-world semantics, so the
// pruned space still contains a witness whenever one exists). Candidate
// plans are checked directly against the per-world definition.
struct PlanSearch {
  const knowwh::LtsModel& m;
  std::vector<int> pre_states;
  std::set<int> goal_states;

  bool per_world_ok(const knowwh::Plan& plan) const {
    for (int s : pre_states) {
      if (!knowwh::strongly_executable(m, m.states[s], plan)) return false;
      for (const auto& t : knowwh::execute(m, {m.states[s]}, plan))
        if (!goal_states.count(m.state_index(t))) return false;
    }
    return true;
  }

  bool dfs(const std::set<int>& cur, std::vector<std::set<int>>& path,
           knowwh::Plan& plan) const {
    if (per_world_ok(plan)) return true;
    for (const auto& action : m.actions) {
      std::set<int> next;
      bool applicable = true;
      for (int s : cur) {
        auto succ = m.successors(action, s);
        if (succ.empty()) { applicable = false; break; }
        next.insert(succ.begin(), succ.end());
      }
      if (!applicable) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      plan.push_back(action);
      if (dfs(next, path, plan)) return true;
      plan.pop_back();
      path.pop_back();
    }
    return false;
  }

  bool known() const {
    if (pre_states.empty()) return true;
    std::set<int> start(pre_states.begin(), pre_states.end());
    std::vector<std::set<int>> path{start};
    knowwh::Plan plan;
    return dfs(start, path, plan);
  }
};

}  // namespace oracle

#endif
