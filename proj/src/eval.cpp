#include "knowwh/eval.hpp"

#include <map>

#include "knowwh/kh.hpp"

namespace knowwh {

namespace {

[[noreturn]] void bad_op(const Formula& f, const char* kind) {
  throw FragmentMismatch("operator in " + to_string(f) + " not interpretable on a " +
                         std::string(kind) + " model");
}

// Truth over one Kripke model; announcements rebuild the model and recurse
// with a fresh evaluator. Memo keyed on (subformula, world).
class KripkeEval {
public:
  explicit KripkeEval(const KripkeModel& m) : m_(m) {}

  bool at(int w, const Formula& f) {
    auto key = std::make_pair(f.id(), w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = compute(w, f);
    memo_.emplace(key, v);
    return v;
  }

private:
  const KripkeModel& m_;
  std::map<std::pair<const void*, int>, bool> memo_;

  std::set<int> succ(const Formula& f, int w) {
    if (!m_.has_agent(f.agent())) throw EvalError("unknown agent '" + f.agent() + "'");
    return m_.successors(f.agent(), w);
  }

  bool compute(int w, const Formula& f) {
    switch (f.op()) {
      case Op::Top: return true;
      case Op::Bottom: return false;
      case Op::Atom: return m_.val_at(f.name(), w);
      case Op::Not: return !at(w, f.left());
      case Op::And: return at(w, f.left()) && at(w, f.right());
      case Op::Or: return at(w, f.left()) || at(w, f.right());
      case Op::Implies: return !at(w, f.left()) || at(w, f.right());
      case Op::Iff: return at(w, f.left()) == at(w, f.right());
      case Op::K:
      case Op::Box: {
        for (int t : succ(f, w))
          if (!at(t, f.left())) return false;
        return true;
      }
      case Op::Kw: {
        bool first = true, value = false;
        for (int t : succ(f, w)) {
          bool v = at(t, f.left());
          if (first) { value = v; first = false; }
          else if (v != value) return false;
        }
        return true;
      }
      case Op::Announce: {
        if (!at(w, f.left())) return true;
        std::set<int> keep;
        for (int i = 0; i < static_cast<int>(m_.worlds.size()); i++)
          if (at(i, f.left())) keep.insert(i);
        KripkeModel sub = restrict_model(m_, keep);
        return KripkeEval(sub).at(sub.require_world(m_.worlds[w]), f.right());
      }
      case Op::AnnounceWhether: {
        bool actual = at(w, f.left());
        std::set<int> keep;
        for (int i = 0; i < static_cast<int>(m_.worlds.size()); i++)
          if (at(i, f.left()) == actual) keep.insert(i);
        KripkeModel sub = restrict_model(m_, keep);
        return KripkeEval(sub).at(sub.require_world(m_.worlds[w]), f.right());
      }
      default:
        bad_op(f, "kripke");
    }
  }
};

class FoEval {
public:
  explicit FoEval(const FOEpistemicModel& m) : m_(m) {}

  bool at(int w, const Formula& f) {
    auto key = std::make_pair(f.id(), w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = compute(w, f);
    memo_.emplace(key, v);
    return v;
  }

private:
  const FOEpistemicModel& m_;
  std::map<std::pair<const void*, int>, bool> memo_;

  std::set<int> succ(const Formula& f, int w) {
    if (!m_.base.has_agent(f.agent())) throw EvalError("unknown agent '" + f.agent() + "'");
    return m_.base.successors(f.agent(), w);
  }

  void require_constant(const std::string& c) {
    if (!m_.has_constant(c)) throw EvalError("undeclared constant '" + c + "'");
  }

  bool sub_eval(const std::set<int>& keep, int w, const Formula& f) {
    FOEpistemicModel sub = restrict_model(m_, keep);
    return FoEval(sub).at(sub.base.require_world(m_.base.worlds[w]), f);
  }

  bool compute(int w, const Formula& f) {
    switch (f.op()) {
      case Op::Top: return true;
      case Op::Bottom: return false;
      case Op::Atom: return m_.base.val_at(f.name(), w);
      case Op::Not: return !at(w, f.left());
      case Op::And: return at(w, f.left()) && at(w, f.right());
      case Op::Or: return at(w, f.left()) || at(w, f.right());
      case Op::Implies: return !at(w, f.left()) || at(w, f.right());
      case Op::Iff: return at(w, f.left()) == at(w, f.right());
      case Op::K: {
        for (int t : succ(f, w))
          if (!at(t, f.left())) return false;
        return true;
      }
      case Op::Kw: {
        bool first = true, value = false;
        for (int t : succ(f, w)) {
          bool v = at(t, f.left());
          if (first) { value = v; first = false; }
          else if (v != value) return false;
        }
        return true;
      }
      case Op::Kv: {
        require_constant(f.constant());
        int value = -1;
        for (int t : succ(f, w)) {
          if (!at(t, f.left())) continue;
          int v = m_.value_of(f.constant(), t);
          if (value == -1) value = v;
          else if (v != value) return false;
        }
        return true;
      }
      case Op::Announce: {
        if (!at(w, f.left())) return true;
        std::set<int> keep;
        for (int i = 0; i < static_cast<int>(m_.base.worlds.size()); i++)
          if (at(i, f.left())) keep.insert(i);
        return sub_eval(keep, w, f.right());
      }
      case Op::AnnounceWhether: {
        bool actual = at(w, f.left());
        std::set<int> keep;
        for (int i = 0; i < static_cast<int>(m_.base.worlds.size()); i++)
          if (at(i, f.left()) == actual) keep.insert(i);
        return sub_eval(keep, w, f.right());
      }
      case Op::Inspect: {
        require_constant(f.constant());
        int want = m_.value_of(f.constant(), w);
        std::set<int> keep;
        for (int i = 0; i < static_cast<int>(m_.base.worlds.size()); i++)
          if (m_.value_of(f.constant(), i) == want) keep.insert(i);
        return sub_eval(keep, w, f.left());
      }
      default:
        bad_op(f, "fo");
    }
  }
};

class TernaryEval {
public:
  explicit TernaryEval(const TernaryModel& m) : m_(m) {}

  bool at(int w, const Formula& f) {
    auto key = std::make_pair(f.id(), w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool v = compute(w, f);
    memo_.emplace(key, v);
    return v;
  }

private:
  const TernaryModel& m_;
  std::map<std::pair<const void*, int>, bool> memo_;

  void require_constant(const std::string& c) {
    if (!m_.has_constant(c)) throw EvalError("undeclared constant '" + c + "'");
  }

  bool compute(int w, const Formula& f) {
    switch (f.op()) {
      case Op::Top: return true;
      case Op::Bottom: return false;
      case Op::Atom: return m_.base.val_at(f.name(), w);
      case Op::Not: return !at(w, f.left());
      case Op::And: return at(w, f.left()) && at(w, f.right());
      case Op::Or: return at(w, f.left()) || at(w, f.right());
      case Op::Implies: return !at(w, f.left()) || at(w, f.right());
      case Op::Iff: return at(w, f.left()) == at(w, f.right());
      case Op::Box: {
        if (!m_.base.has_agent(f.agent()))
          throw EvalError("unknown agent '" + f.agent() + "'");
        for (int t : m_.base.successors(f.agent(), w))
          if (!at(t, f.left())) return false;
        return true;
      }
      case Op::DiaC: {
        require_constant(f.constant());
        for (const auto& t : m_.triples(f.agent(), f.constant()))
          if (t[0] == w && at(t[1], f.left()) && at(t[2], f.left())) return true;
        return false;
      }
      case Op::DiaC2: {
        require_constant(f.constant());
        for (const auto& t : m_.triples(f.agent(), f.constant()))
          if (t[0] == w && at(t[1], f.left()) && at(t[2], f.right())) return true;
        return false;
      }
      default:
        bad_op(f, "ternary");
    }
  }
};

template <typename ModelT, typename EvalT>
ModelT announce_impl(const ModelT& m, const Formula& announced, const KripkeModel& base) {
  EvalT ev(m);
  std::set<int> keep;
  for (int i = 0; i < static_cast<int>(base.worlds.size()); i++)
    if (ev.at(i, announced)) keep.insert(i);
  if (keep.empty()) throw EmptyResult("announcement of " + to_string(announced) +
                                      " holds nowhere");
  return restrict_model(m, keep);
}

}  // namespace

KripkeModel announce(const KripkeModel& m, const Formula& announced) {
  return announce_impl<KripkeModel, KripkeEval>(m, announced, m);
}

FOEpistemicModel announce(const FOEpistemicModel& m, const Formula& announced) {
  return announce_impl<FOEpistemicModel, FoEval>(m, announced, m.base);
}

KripkeModel announce_whether(const KripkeModel& m, const Formula& f, const std::string& at) {
  bool actual = eval_kripke(m, at, f);
  return announce(m, actual ? f : Formula::neg(f));
}

FOEpistemicModel announce_whether(const FOEpistemicModel& m, const Formula& f,
                                  const std::string& at) {
  FoEval ev(m);
  bool actual = ev.at(m.base.require_world(at), f);
  return announce(m, actual ? f : Formula::neg(f));
}

bool eval_kripke(const KripkeModel& m, const std::string& world, const Formula& f) {
  if (!operators_within(f, {Op::K, Op::Kw, Op::Box, Op::Announce, Op::AnnounceWhether}))
    throw FragmentMismatch("formula " + to_string(f) + " needs more than a Kripke model");
  return KripkeEval(m).at(m.require_world(world), f);
}

bool eval_el(const KripkeModel& m, const std::string& world, const Formula& f) {
  if (!operators_within(f, {Op::K}))
    throw FragmentMismatch("eval_el expects an EL formula, got " +
                           std::string(to_string(fragment(f))));
  return KripkeEval(m).at(m.require_world(world), f);
}

bool eval_ncl(const KripkeModel& m, const std::string& world, const Formula& f) {
  if (!operators_within(f, {Op::Kw, Op::Announce, Op::AnnounceWhether}))
    throw FragmentMismatch("eval_ncl expects an NCL(+PAL) formula, got " +
                           std::string(to_string(fragment(f))));
  return KripkeEval(m).at(m.require_world(world), f);
}

bool eval_kv(const FOEpistemicModel& m, const std::string& world, const Formula& f) {
  if (!operators_within(f, {Op::K, Op::Kw, Op::Kv, Op::Announce, Op::AnnounceWhether,
                            Op::Inspect}))
    throw FragmentMismatch("formula " + to_string(f) + " not interpretable on an FO model");
  return FoEval(m).at(m.base.require_world(world), f);
}

bool eval_mlkv(const TernaryModel& m, const std::string& world, const Formula& f) {
  if (!operators_within(f, {Op::Box, Op::DiaC, Op::DiaC2}))
    throw FragmentMismatch("formula " + to_string(f) + " not interpretable on a ternary model");
  return TernaryEval(m).at(m.base.require_world(world), f);
}

bool kd_primitive(const FOEpistemicModel& m, const std::string& world,
                  const std::string& agent, const std::string& c, const std::string& d) {
  if (!m.has_constant(c)) throw EvalError("undeclared constant '" + c + "'");
  if (!m.has_constant(d)) throw EvalError("undeclared constant '" + d + "'");
  if (!m.base.has_agent(agent)) throw EvalError("unknown agent '" + agent + "'");
  int w = m.base.require_world(world);
  std::set<int> acc = m.base.successors(agent, w);
  for (int t1 : acc)
    for (int t2 : acc)
      if (m.value_of(c, t1) == m.value_of(c, t2) && m.value_of(d, t1) != m.value_of(d, t2))
        return false;
  return true;
}

bool eval(const AnyModel& m, const std::string& world, const Formula& f) {
  struct Visitor {
    const std::string& world;
    const Formula& f;
    bool operator()(const KripkeModel& m) const { return eval_kripke(m, world, f); }
    bool operator()(const FOEpistemicModel& m) const { return eval_kv(m, world, f); }
    bool operator()(const TernaryModel& m) const { return eval_mlkv(m, world, f); }
    bool operator()(const LtsModel& m) const {
      if (!operators_within(f, {Op::Kh}))
        throw FragmentMismatch("formula " + to_string(f) + " not interpretable on an LTS");
      return eval_lts(m, world, f);
    }
  };
  return std::visit(Visitor{world, f}, m);
}

}  // namespace knowwh
