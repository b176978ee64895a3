#include "knowwh/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace knowwh {

const char* to_string(Fragment f) {
  switch (f) {
    case Fragment::EL: return "EL";
    case Fragment::NCL: return "NCL";
    case Fragment::ELKVR: return "ELKv^r";
    case Fragment::PALKVR: return "PALKv^r";
    case Fragment::PILKV: return "PILKv";
    case Fragment::MLKV: return "MLKv";
    case Fragment::LKH: return "L_Kh";
    case Fragment::Mixed: return "MIXED";
  }
  return "?";
}

Formula Formula::make(Node n) {
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::top() {
  static const Formula t = make(Node{Op::Top, "", "", Formula(nullptr), Formula(nullptr)});
  return t;
}

Formula Formula::bottom() {
  static const Formula b = make(Node{Op::Bottom, "", "", Formula(nullptr), Formula(nullptr)});
  return b;
}

Formula Formula::atom(std::string name) {
  return make(Node{Op::Atom, std::move(name), "", top(), top()});
}

Formula Formula::neg(Formula f) {
  return make(Node{Op::Not, "", "", std::move(f), top()});
}

Formula Formula::conj(Formula a, Formula b) {
  return make(Node{Op::And, "", "", std::move(a), std::move(b)});
}

Formula Formula::disj(Formula a, Formula b) {
  return make(Node{Op::Or, "", "", std::move(a), std::move(b)});
}

Formula Formula::impl(Formula a, Formula b) {
  return make(Node{Op::Implies, "", "", std::move(a), std::move(b)});
}

Formula Formula::iff(Formula a, Formula b) {
  return make(Node{Op::Iff, "", "", std::move(a), std::move(b)});
}

Formula Formula::k(std::string agent, Formula f) {
  return make(Node{Op::K, std::move(agent), "", std::move(f), top()});
}

Formula Formula::kw(std::string agent, Formula f) {
  return make(Node{Op::Kw, std::move(agent), "", std::move(f), top()});
}

Formula Formula::kv(std::string agent, Formula cond, std::string constant) {
  return make(Node{Op::Kv, std::move(agent), std::move(constant), std::move(cond), top()});
}

Formula Formula::announce(Formula announced, Formula f) {
  return make(Node{Op::Announce, "", "", std::move(announced), std::move(f)});
}

Formula Formula::announce_whether(Formula announced, Formula f) {
  return make(Node{Op::AnnounceWhether, "", "", std::move(announced), std::move(f)});
}

Formula Formula::inspect(std::string constant, Formula f) {
  return make(Node{Op::Inspect, "", std::move(constant), std::move(f), top()});
}

Formula Formula::box(std::string agent, Formula f) {
  return make(Node{Op::Box, std::move(agent), "", std::move(f), top()});
}

Formula Formula::dia_c(std::string agent, std::string constant, Formula f) {
  return make(Node{Op::DiaC, std::move(agent), std::move(constant), std::move(f), top()});
}

Formula Formula::dia_c2(std::string agent, std::string constant, Formula a, Formula b) {
  return make(Node{Op::DiaC2, std::move(agent), std::move(constant), std::move(a), std::move(b)});
}

Formula Formula::kh(Formula pre, Formula goal) {
  return make(Node{Op::Kh, "", "", std::move(pre), std::move(goal)});
}

Formula Formula::dia(std::string agent, Formula f) {
  return neg(box(std::move(agent), neg(std::move(f))));
}

Formula Formula::box_c2(std::string agent, std::string constant, Formula a, Formula b) {
  return neg(dia_c2(std::move(agent), std::move(constant), neg(std::move(a)), neg(std::move(b))));
}

Formula Formula::uni(Formula f) {
  return kh(neg(std::move(f)), bottom());
}

Formula Formula::kv_plain(std::string agent, std::string constant) {
  return kv(std::move(agent), top(), std::move(constant));
}

Formula Formula::kd(std::string agent, std::string c, std::string d) {
  return k(agent, inspect(std::move(c), kv(agent, top(), std::move(d))));
}

Formula Formula::ann_dia(Formula announced, Formula f) {
  return neg(announce(std::move(announced), neg(std::move(f))));
}

int Formula::arity() const {
  switch (node_->op) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom:
      return 0;
    case Op::Not:
    case Op::K:
    case Op::Kw:
    case Op::Kv:
    case Op::Inspect:
    case Op::Box:
    case Op::DiaC:
      return 1;
    default:
      return 2;
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->op != other.node_->op || node_->label != other.node_->label ||
      node_->cname != other.node_->cname)
    return false;
  int n = arity();
  if (n >= 1 && !(node_->lhs == other.node_->lhs)) return false;
  if (n >= 2 && !(node_->rhs == other.node_->rhs)) return false;
  return true;
}

namespace {

// Prefix operators get a space before their argument unless the argument's
// rendering already opens with a parenthesis: "Kw{i} p", "Kw{i}(p -> q)".
std::string sp(const std::string& arg) {
  if (!arg.empty() && arg.front() == '(') return arg;
  return " " + arg;
}

std::string render(const Formula& f) {
  switch (f.op()) {
    case Op::Top: return "T";
    case Op::Bottom: return "F";
    case Op::Atom: return f.name();
    case Op::Not: return "~" + render(f.left());
    case Op::And: return "(" + render(f.left()) + " & " + render(f.right()) + ")";
    case Op::Or: return "(" + render(f.left()) + " | " + render(f.right()) + ")";
    case Op::Implies: return "(" + render(f.left()) + " -> " + render(f.right()) + ")";
    case Op::Iff: return "(" + render(f.left()) + " <-> " + render(f.right()) + ")";
    case Op::K: return "K{" + f.agent() + "}" + sp(render(f.left()));
    case Op::Kw: return "Kw{" + f.agent() + "}" + sp(render(f.left()));
    case Op::Kv:
      return "Kv{" + f.agent() + "}(" + render(f.left()) + ", $" + f.constant() + ")";
    case Op::Announce: return "[" + render(f.left()) + "]" + sp(render(f.right()));
    case Op::AnnounceWhether: return "[?" + render(f.left()) + "]" + sp(render(f.right()));
    case Op::Inspect: return "[$" + f.constant() + "]" + sp(render(f.left()));
    case Op::Box: return "box{" + f.agent() + "}" + sp(render(f.left()));
    case Op::DiaC:
      return "dia{" + f.agent() + ",$" + f.constant() + "}" + sp(render(f.left()));
    case Op::DiaC2:
      return "dia{" + f.agent() + ",$" + f.constant() + "}(" + render(f.left()) + ", " +
             render(f.right()) + ")";
    case Op::Kh: return "Kh(" + render(f.left()) + ", " + render(f.right()) + ")";
  }
  return "?";
}

// Operator census bits.
enum : unsigned {
  USE_K = 1u << 0,
  USE_KW = 1u << 1,
  USE_KV = 1u << 2,
  USE_DYN = 1u << 3,   // announcement / announcing-whether
  USE_INSP = 1u << 4,
  USE_BOXDIA = 1u << 5,  // box{i} and the ternary diamonds
  USE_KH = 1u << 6,
};

unsigned census(const Formula& f) {
  unsigned c = 0;
  switch (f.op()) {
    case Op::K: c = USE_K; break;
    case Op::Kw: c = USE_KW; break;
    case Op::Kv: c = USE_KV; break;
    case Op::Announce:
    case Op::AnnounceWhether: c = USE_DYN; break;
    case Op::Inspect: c = USE_INSP; break;
    case Op::Box:
    case Op::DiaC:
    case Op::DiaC2: c = USE_BOXDIA; break;
    case Op::Kh: c = USE_KH; break;
    default: break;
  }
  int n = f.arity();
  if (n >= 1) c |= census(f.left());
  if (n >= 2) c |= census(f.right());
  return c;
}

Fragment classify(unsigned c) {
  auto within = [c](unsigned allowed) { return (c & ~allowed) == 0; };
  if (c == 0) return Fragment::EL;
  if (c & USE_KH) return within(USE_KH) ? Fragment::LKH : Fragment::Mixed;
  if (c & USE_BOXDIA) return within(USE_BOXDIA) ? Fragment::MLKV : Fragment::Mixed;
  if (c & USE_KW) return within(USE_KW | USE_DYN) ? Fragment::NCL : Fragment::Mixed;
  if (c & USE_INSP) return within(USE_K | USE_KV | USE_INSP) ? Fragment::PILKV : Fragment::Mixed;
  if (c & USE_KV) return (c & USE_DYN) ? Fragment::PALKVR : Fragment::ELKVR;
  if (c & USE_K) return (c & USE_DYN) ? Fragment::PALKVR : Fragment::EL;
  return Fragment::EL;  // announcements over a purely boolean body
}

}  // namespace

std::string to_string(const Formula& f) { return render(f); }

Fragment fragment(const Formula& f) { return classify(census(f)); }

bool fragment_leq(Fragment a, Fragment b) {
  if (a == b || b == Fragment::Mixed || a == Fragment::EL) return true;
  if (a == Fragment::ELKVR)
    return b == Fragment::PALKVR || b == Fragment::PILKV;
  return false;
}

Formula subst(const Formula& f, const std::string& atom, const Formula& with) {
  return subst_all(f, {{atom, with}});
}

Formula subst_all(const Formula& f,
                  const std::vector<std::pair<std::string, Formula>>& map) {
  if (f.op() == Op::Atom) {
    for (const auto& [name, repl] : map)
      if (f.name() == name) return repl;
    return f;
  }
  int n = f.arity();
  if (n == 0) return f;
  Formula l = subst_all(f.left(), map);
  if (n == 1) {
    switch (f.op()) {
      case Op::Not: return Formula::neg(l);
      case Op::K: return Formula::k(f.agent(), l);
      case Op::Kw: return Formula::kw(f.agent(), l);
      case Op::Kv: return Formula::kv(f.agent(), l, f.constant());
      case Op::Inspect: return Formula::inspect(f.constant(), l);
      case Op::Box: return Formula::box(f.agent(), l);
      case Op::DiaC: return Formula::dia_c(f.agent(), f.constant(), l);
      default: throw std::logic_error("subst: bad arity");
    }
  }
  Formula r = subst_all(f.right(), map);
  switch (f.op()) {
    case Op::And: return Formula::conj(l, r);
    case Op::Or: return Formula::disj(l, r);
    case Op::Implies: return Formula::impl(l, r);
    case Op::Iff: return Formula::iff(l, r);
    case Op::Announce: return Formula::announce(l, r);
    case Op::AnnounceWhether: return Formula::announce_whether(l, r);
    case Op::DiaC2: return Formula::dia_c2(f.agent(), f.constant(), l, r);
    case Op::Kh: return Formula::kh(l, r);
    default: throw std::logic_error("subst: bad arity");
  }
}

Formula desugar(const Formula& f) {
  int n = f.arity();
  if (n == 0) return f;
  Formula l = desugar(f.left());
  if (n == 1) {
    switch (f.op()) {
      case Op::Not: return Formula::neg(l);
      case Op::K: return Formula::k(f.agent(), l);
      case Op::Kw: return Formula::kw(f.agent(), l);
      case Op::Kv: return Formula::kv(f.agent(), l, f.constant());
      case Op::Inspect: return Formula::inspect(f.constant(), l);
      case Op::Box: return Formula::box(f.agent(), l);
      case Op::DiaC: return Formula::dia_c(f.agent(), f.constant(), l);
      default: throw std::logic_error("desugar: bad arity");
    }
  }
  Formula r = desugar(f.right());
  switch (f.op()) {
    case Op::And: return Formula::conj(l, r);
    case Op::Or: return Formula::neg(Formula::conj(Formula::neg(l), Formula::neg(r)));
    case Op::Implies: return Formula::neg(Formula::conj(l, Formula::neg(r)));
    case Op::Iff: {
      Formula ab = Formula::neg(Formula::conj(l, Formula::neg(r)));
      Formula ba = Formula::neg(Formula::conj(r, Formula::neg(l)));
      return Formula::conj(ab, ba);
    }
    case Op::Announce: return Formula::announce(l, r);
    case Op::AnnounceWhether: return Formula::announce_whether(l, r);
    case Op::DiaC2: return Formula::dia_c2(f.agent(), f.constant(), l, r);
    case Op::Kh: return Formula::kh(l, r);
    default: throw std::logic_error("desugar: bad arity");
  }
}

bool equal_desugared(const Formula& a, const Formula& b) {
  return desugar(a) == desugar(b);
}

namespace {

void collect(const Formula& f, std::set<std::string>* at, std::set<std::string>* ag,
             std::set<std::string>* co) {
  switch (f.op()) {
    case Op::Atom:
      at->insert(f.name());
      return;
    case Op::K:
    case Op::Kw:
    case Op::Box:
      ag->insert(f.agent());
      break;
    case Op::Kv:
    case Op::DiaC:
    case Op::DiaC2:
      ag->insert(f.agent());
      co->insert(f.constant());
      break;
    case Op::Inspect:
      co->insert(f.constant());
      break;
    default:
      break;
  }
  int n = f.arity();
  if (n >= 1) collect(f.left(), at, ag, co);
  if (n >= 2) collect(f.right(), at, ag, co);
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> at, ag, co;
  collect(f, &at, &ag, &co);
  return at;
}

std::set<std::string> agents(const Formula& f) {
  std::set<std::string> at, ag, co;
  collect(f, &at, &ag, &co);
  return ag;
}

std::set<std::string> constants(const Formula& f) {
  std::set<std::string> at, ag, co;
  collect(f, &at, &ag, &co);
  return co;
}

bool operators_within(const Formula& f, std::initializer_list<Op> allowed) {
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom:
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      break;
    default: {
      bool ok = false;
      for (Op a : allowed)
        if (a == f.op()) ok = true;
      if (!ok) return false;
    }
  }
  int n = f.arity();
  if (n >= 1 && !operators_within(f.left(), allowed)) return false;
  if (n >= 2 && !operators_within(f.right(), allowed)) return false;
  return true;
}

int modal_depth(const Formula& f) {
  int n = f.arity();
  int l = n >= 1 ? modal_depth(f.left()) : 0;
  int r = n >= 2 ? modal_depth(f.right()) : 0;
  int sub = std::max(l, r);
  switch (f.op()) {
    case Op::K:
    case Op::Kw:
    case Op::Kv:
    case Op::Announce:
    case Op::AnnounceWhether:
    case Op::Inspect:
    case Op::Box:
    case Op::DiaC:
    case Op::DiaC2:
    case Op::Kh:
      return sub + 1;
    default:
      return sub;
  }
}

}  // namespace knowwh
