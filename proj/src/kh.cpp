#include "knowwh/kh.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_map>

#include "knowwh/eval.hpp"

namespace knowwh {

namespace {

std::string plan_text(const Plan& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); i++) {
    if (i) os << " ";
    os << p[i];
  }
  return os.str();
}

int require_small(const LtsModel& m) {
  int n = static_cast<int>(m.states.size());
  if (n > 64) throw ModelError("LTS has more than 64 states");
  return n;
}

// image[a][s] = successor mask of state s under action a
std::vector<std::vector<std::uint64_t>> images(const LtsModel& m, int n) {
  std::vector<std::vector<std::uint64_t>> img(m.actions.size(),
                                              std::vector<std::uint64_t>(n, 0));
  for (std::size_t a = 0; a < m.actions.size(); a++) {
    auto it = m.trans.find(m.actions[a]);
    if (it == m.trans.end()) continue;
    for (const auto& [from, to] : it->second) img[a][from] |= std::uint64_t{1} << to;
  }
  return img;
}

class LtsEval {
public:
  explicit LtsEval(const LtsModel& m)
      : m_(m), n_(require_small(m)), img_(images(m, n_)) {}

  bool at(int s, const Formula& f) {
    switch (f.op()) {
      case Op::Top: return true;
      case Op::Bottom: return false;
      case Op::Atom: return m_.val_at(f.name(), s);
      case Op::Not: return !at(s, f.left());
      case Op::And: return at(s, f.left()) && at(s, f.right());
      case Op::Or: return at(s, f.left()) || at(s, f.right());
      case Op::Implies: return !at(s, f.left()) || at(s, f.right());
      case Op::Iff: return at(s, f.left()) == at(s, f.right());
      case Op::Kh: return kh(f);
      default:
        throw FragmentMismatch("operator in " + to_string(f) +
                               " not interpretable on an LTS");
    }
  }

  std::uint64_t truth_set(const Formula& f) {
    std::uint64_t mask = 0;
    for (int s = 0; s < n_; s++)
      if (at(s, f)) mask |= std::uint64_t{1} << s;
    return mask;
  }

  // Kh is world-independent, so it is resolved once per subformula.
  bool kh(const Formula& f) {
    auto it = kh_memo_.find(f.id());
    if (it != kh_memo_.end()) return it->second;
    bool v = search(truth_set(f.left()), truth_set(f.right())).holds;
    kh_memo_.emplace(f.id(), v);
    return v;
  }

  KhResult search(std::uint64_t pre, std::uint64_t goal) {
    if (pre == 0) return {true, Plan{}};
    // BFS over belief states; applicable action = every state has a successor.
    struct Entry {
      std::uint64_t from;
      int action;
    };
    std::map<std::uint64_t, Entry> parent;
    std::vector<std::uint64_t> frontier{pre}, next;
    parent.emplace(pre, Entry{0, -1});
    auto rebuild = [&](std::uint64_t at) {
      Plan plan;
      while (true) {
        const Entry& e = parent.at(at);
        if (e.action < 0) break;
        plan.push_back(m_.actions[e.action]);
        at = e.from;
      }
      std::reverse(plan.begin(), plan.end());
      return plan;
    };
    if ((pre & ~goal) == 0) return {true, Plan{}};
    while (!frontier.empty()) {
      next.clear();
      for (std::uint64_t cur : frontier) {
        for (std::size_t a = 0; a < m_.actions.size(); a++) {
          std::uint64_t succ = 0;
          bool applicable = true;
          for (int s = 0; s < n_ && applicable; s++) {
            if (!(cur >> s & 1)) continue;
            if (img_[a][s] == 0) applicable = false;
            succ |= img_[a][s];
          }
          if (!applicable || parent.count(succ)) continue;
          parent.emplace(succ, Entry{cur, static_cast<int>(a)});
          if ((succ & ~goal) == 0) return {true, rebuild(succ)};
          next.push_back(succ);
        }
      }
      frontier.swap(next);
    }
    return {false, std::nullopt};
  }

private:
  const LtsModel& m_;
  int n_;
  std::vector<std::vector<std::uint64_t>> img_;
  std::unordered_map<const void*, bool> kh_memo_;
};

}  // namespace

NotExecutable::NotExecutable(Plan prefix, std::string witness_state)
    : std::runtime_error("plan prefix '" + plan_text(prefix) + "' not executable at state " +
                         witness_state),
      prefix_(std::move(prefix)),
      witness_state_(std::move(witness_state)) {}

bool strongly_executable(const LtsModel& m, const std::string& state, const Plan& plan) {
  require_small(m);
  int s = m.require_state(state);
  std::set<int> cur{s};
  for (const auto& action : plan) {
    if (!m.has_action(action)) throw ModelError("unknown action '" + action + "'");
    std::set<int> next;
    for (int t : cur) {
      std::set<int> succ = m.successors(action, t);
      if (succ.empty()) return false;
      next.insert(succ.begin(), succ.end());
    }
    cur.swap(next);
  }
  return true;
}

std::set<std::string> execute(const LtsModel& m, const std::set<std::string>& from,
                              const Plan& plan) {
  require_small(m);
  std::set<int> cur;
  for (const auto& id : from) cur.insert(m.require_state(id));
  Plan prefix;
  for (const auto& action : plan) {
    if (!m.has_action(action)) throw ModelError("unknown action '" + action + "'");
    prefix.push_back(action);
    std::set<int> next;
    for (int t : cur) {
      std::set<int> succ = m.successors(action, t);
      if (succ.empty()) throw NotExecutable(prefix, m.states[t]);
      next.insert(succ.begin(), succ.end());
    }
    cur.swap(next);
  }
  std::set<std::string> out;
  for (int t : cur) out.insert(m.states[t]);
  return out;
}

KhResult eval_kh(const LtsModel& m, const Formula& pre, const Formula& goal) {
  if (!operators_within(pre, {Op::Kh}) || !operators_within(goal, {Op::Kh}))
    throw FragmentMismatch("Kh arguments must be boolean combinations over atoms and Kh");
  LtsEval ev(m);
  return ev.search(ev.truth_set(pre), ev.truth_set(goal));
}

bool eval_u(const LtsModel& m, const Formula& f) {
  LtsEval ev(m);
  for (int s = 0; s < static_cast<int>(m.states.size()); s++)
    if (!ev.at(s, f)) return false;
  return true;
}

bool eval_lts(const LtsModel& m, const std::string& state, const Formula& f) {
  LtsEval ev(m);
  return ev.at(m.require_state(state), f);
}

}  // namespace knowwh
