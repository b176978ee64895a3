#include "knowwh/lab.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "knowwh/eval.hpp"
#include "knowwh/model_json.hpp"

namespace knowwh {

namespace {

constexpr int kMaxEnumWorlds = 4;   // relation masks are enumerated up to 4 worlds
constexpr int kMaxFlatWorlds = 31;  // flat evaluation works on uint32 world masks

// ---- compiled formulas ----------------------------------------------------

struct CNode {
  Op op;
  int a = -1, b = -1;
  int agent = -1, cons = -1, atom = -1;
};

struct Compiled {
  std::vector<CNode> nodes;
  std::vector<std::string> atoms, agents, constants;
  int root = -1;

  int index_of(const std::vector<std::string>& xs, const std::string& x) const {
    return static_cast<int>(std::find(xs.begin(), xs.end(), x) - xs.begin());
  }
};

Compiled compile(const Formula& f) {
  Compiled c;
  for (const auto& a : atoms(f)) c.atoms.push_back(a);
  for (const auto& a : agents(f)) c.agents.push_back(a);
  for (const auto& a : constants(f)) c.constants.push_back(a);

  std::map<std::tuple<Op, int, int, int, int, int>, int> dedup;
  auto build = [&](auto&& self, const Formula& g) -> int {
    int a = -1, b = -1;
    int ar = g.arity();
    if (ar >= 1) a = self(self, g.left());
    if (ar >= 2) b = self(self, g.right());
    CNode n;
    n.op = g.op();
    n.a = a;
    n.b = b;
    switch (g.op()) {
      case Op::Atom: n.atom = c.index_of(c.atoms, g.name()); break;
      case Op::K:
      case Op::Kw:
      case Op::Box: n.agent = c.index_of(c.agents, g.agent()); break;
      case Op::Kv:
      case Op::DiaC:
      case Op::DiaC2:
        n.agent = c.index_of(c.agents, g.agent());
        n.cons = c.index_of(c.constants, g.constant());
        break;
      case Op::Inspect: n.cons = c.index_of(c.constants, g.constant()); break;
      default: break;
    }
    auto key = std::make_tuple(n.op, n.a, n.b, n.agent, n.cons, n.atom);
    auto it = dedup.find(key);
    if (it != dedup.end()) return it->second;
    c.nodes.push_back(n);
    int id = static_cast<int>(c.nodes.size()) - 1;
    dedup.emplace(key, id);
    return id;
  };
  c.root = build(build, f);
  return c;
}

// ---- flat model contexts and evaluators -----------------------------------

struct KripkeCtx {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> succ;  // [agent][world] -> mask
  std::vector<std::uint32_t> val;                // [atom] -> mask
  // FO extension
  int nvalues = 0;
  std::vector<std::vector<std::uint8_t>> vc;         // [constant][world] -> value
  std::vector<std::vector<std::uint32_t>> val_mask;  // [constant][value] -> worlds
};

class FlatEval {
public:
  FlatEval(const Compiled& c, const KripkeCtx& m) : c_(c), m_(m) {}

  void reset() { memo_.clear(); }

  std::uint32_t truth(int node, std::uint32_t alive) {
    for (const auto& [n, a, v] : memo_)
      if (n == node && a == alive) return v;
    std::uint32_t v = compute(node, alive);
    memo_.emplace_back(node, alive, v);
    return v;
  }

private:
  const Compiled& c_;
  const KripkeCtx& m_;
  std::vector<std::tuple<int, std::uint32_t, std::uint32_t>> memo_;

  std::uint32_t compute(int node, std::uint32_t alive) {
    const CNode& nd = c_.nodes[node];
    switch (nd.op) {
      case Op::Top: return alive;
      case Op::Bottom: return 0;
      case Op::Atom: return m_.val[nd.atom] & alive;
      case Op::Not: return alive & ~truth(nd.a, alive);
      case Op::And: return truth(nd.a, alive) & truth(nd.b, alive);
      case Op::Or: return truth(nd.a, alive) | truth(nd.b, alive);
      case Op::Implies: return (alive & ~truth(nd.a, alive)) | truth(nd.b, alive);
      case Op::Iff: return alive & ~(truth(nd.a, alive) ^ truth(nd.b, alive));
      case Op::K:
      case Op::Box: {
        std::uint32_t x = truth(nd.a, alive);
        std::uint32_t out = 0;
        for (int s = 0; s < m_.n; s++) {
          if (!(alive >> s & 1)) continue;
          if ((m_.succ[nd.agent][s] & alive & ~x) == 0) out |= 1u << s;
        }
        return out;
      }
      case Op::Kw: {
        std::uint32_t x = truth(nd.a, alive);
        std::uint32_t out = 0;
        for (int s = 0; s < m_.n; s++) {
          if (!(alive >> s & 1)) continue;
          std::uint32_t sa = m_.succ[nd.agent][s] & alive;
          if ((sa & ~x) == 0 || (sa & x) == 0) out |= 1u << s;
        }
        return out;
      }
      case Op::Kv: {
        std::uint32_t x = truth(nd.a, alive);
        std::uint32_t out = 0;
        for (int s = 0; s < m_.n; s++) {
          if (!(alive >> s & 1)) continue;
          std::uint32_t ts = m_.succ[nd.agent][s] & alive & x;
          int value = -1;
          bool ok = true;
          while (ts) {
            int t = __builtin_ctz(ts);
            ts &= ts - 1;
            int v = m_.vc[nd.cons][t];
            if (value == -1) value = v;
            else if (v != value) { ok = false; break; }
          }
          if (ok) out |= 1u << s;
        }
        return out;
      }
      case Op::Announce: {
        std::uint32_t t = truth(nd.a, alive);
        std::uint32_t sub = alive & t;
        std::uint32_t body = sub ? truth(nd.b, sub) : 0;
        return (alive & ~t) | body;
      }
      case Op::AnnounceWhether: {
        std::uint32_t t = truth(nd.a, alive);
        std::uint32_t in = alive & t, out = alive & ~t;
        std::uint32_t r = 0;
        if (in) r |= truth(nd.b, in);
        if (out) r |= truth(nd.b, out);
        return r;
      }
      case Op::Inspect: {
        std::uint32_t r = 0;
        for (int v = 0; v < m_.nvalues; v++) {
          std::uint32_t sub = alive & m_.val_mask[nd.cons][v];
          if (sub) r |= truth(nd.a, sub);
        }
        return r;
      }
      default:
        throw FragmentMismatch("operator not supported by the kripke/fo enumerator");
    }
  }
};

struct TernCtx {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> succ;
  std::vector<std::uint32_t> val;
  // [(agent, constant)][source world] -> ordered pairs
  std::vector<std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>>> tern;
  int pair_index(int agent, int cons, int nc) const { return agent * nc + cons; }
};

class FlatTernEval {
public:
  FlatTernEval(const Compiled& c, const TernCtx& m) : c_(c), memo_(c.nodes.size(), 0), m_(m) {}

  void reset() { std::fill(memo_.begin(), memo_.end(), 0); }

  std::uint32_t truth(int node) {
    if (memo_[node] & 1) return memo_[node] >> 1;
    std::uint32_t v = compute(node);
    memo_[node] = (static_cast<std::uint64_t>(v) << 1) | 1;
    return v;
  }

private:
  const Compiled& c_;
  std::vector<std::uint64_t> memo_;  // bit 0: computed, rest: mask
  const TernCtx& m_;

  std::uint32_t full() const { return (1u << m_.n) - 1; }

  std::uint32_t compute(int node) {
    const CNode& nd = c_.nodes[node];
    int nc = static_cast<int>(c_.constants.size());
    switch (nd.op) {
      case Op::Top: return full();
      case Op::Bottom: return 0;
      case Op::Atom: return m_.val[nd.atom];
      case Op::Not: return full() & ~truth(nd.a);
      case Op::And: return truth(nd.a) & truth(nd.b);
      case Op::Or: return truth(nd.a) | truth(nd.b);
      case Op::Implies: return (full() & ~truth(nd.a)) | truth(nd.b);
      case Op::Iff: return full() & ~(truth(nd.a) ^ truth(nd.b));
      case Op::Box: {
        std::uint32_t x = truth(nd.a);
        std::uint32_t out = 0;
        for (int s = 0; s < m_.n; s++)
          if ((m_.succ[nd.agent][s] & ~x) == 0) out |= 1u << s;
        return out;
      }
      case Op::DiaC:
      case Op::DiaC2: {
        std::uint32_t x = truth(nd.a);
        std::uint32_t y = nd.op == Op::DiaC ? x : truth(nd.b);
        std::uint32_t out = 0;
        const auto& per = m_.tern[m_.pair_index(nd.agent, nd.cons, nc)];
        for (int s = 0; s < m_.n; s++)
          for (const auto& [u, v] : per[s])
            if ((x >> u & 1) && (y >> v & 1)) { out |= 1u << s; break; }
        return out;
      }
      default:
        throw FragmentMismatch("operator not supported by the ternary enumerator");
    }
  }
};

struct LtsCtx {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> img;  // [action][state] -> mask
  std::vector<std::uint32_t> val;
};

class FlatLtsEval {
public:
  FlatLtsEval(const Compiled& c, const LtsCtx& m) : c_(c), memo_(c.nodes.size(), 0), m_(m) {}

  void reset() { std::fill(memo_.begin(), memo_.end(), 0); }

  std::uint32_t truth(int node) {
    if (memo_[node] & 1) return memo_[node] >> 1;
    std::uint32_t v = compute(node);
    memo_[node] = (static_cast<std::uint64_t>(v) << 1) | 1;
    return v;
  }

private:
  const Compiled& c_;
  std::vector<std::uint64_t> memo_;
  const LtsCtx& m_;

  std::uint32_t full() const { return (1u << m_.n) - 1; }

  bool kh(std::uint32_t pre, std::uint32_t goal) {
    if (pre == 0) return true;
    if ((pre & ~goal) == 0) return true;
    // BFS over belief states; n <= 4 here, so the visited set is an array.
    std::array<bool, 1 << kMaxEnumWorlds> seen{};
    std::vector<std::uint32_t> frontier{pre}, next;
    seen[pre] = true;
    while (!frontier.empty()) {
      next.clear();
      for (std::uint32_t cur : frontier) {
        for (const auto& img : m_.img) {
          std::uint32_t succ = 0;
          bool applicable = true;
          std::uint32_t bits = cur;
          while (bits) {
            int s = __builtin_ctz(bits);
            bits &= bits - 1;
            if (img[s] == 0) { applicable = false; break; }
            succ |= img[s];
          }
          if (!applicable || seen[succ]) continue;
          seen[succ] = true;
          if ((succ & ~goal) == 0) return true;
          next.push_back(succ);
        }
      }
      frontier.swap(next);
    }
    return false;
  }

  std::uint32_t compute(int node) {
    const CNode& nd = c_.nodes[node];
    switch (nd.op) {
      case Op::Top: return full();
      case Op::Bottom: return 0;
      case Op::Atom: return m_.val[nd.atom];
      case Op::Not: return full() & ~truth(nd.a);
      case Op::And: return truth(nd.a) & truth(nd.b);
      case Op::Or: return truth(nd.a) | truth(nd.b);
      case Op::Implies: return (full() & ~truth(nd.a)) | truth(nd.b);
      case Op::Iff: return full() & ~(truth(nd.a) ^ truth(nd.b));
      case Op::Kh: return kh(truth(nd.a), truth(nd.b)) ? full() : 0;
      default:
        throw FragmentMismatch("operator not supported by the LTS enumerator");
    }
  }
};

// ---- relation enumeration and canonical forms ------------------------------

bool mask_has(std::uint32_t mask, int n, int a, int b) { return mask >> (a * n + b) & 1; }

bool rel_mask_in_class(std::uint32_t mask, int n, FrameClass cls) {
  auto has = [&](int a, int b) { return mask_has(mask, n, a, b); };
  switch (cls) {
    case FrameClass::Arbitrary: return true;
    case FrameClass::Serial:
      for (int a = 0; a < n; a++) {
        bool any = false;
        for (int b = 0; b < n && !any; b++) any = has(a, b);
        if (!any) return false;
      }
      return true;
    case FrameClass::Reflexive:
      for (int a = 0; a < n; a++)
        if (!has(a, a)) return false;
      return true;
    case FrameClass::Transitive:
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          if (has(a, b))
            for (int c = 0; c < n; c++)
              if (has(b, c) && !has(a, c)) return false;
      return true;
    case FrameClass::Symmetric:
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          if (has(a, b) && !has(b, a)) return false;
      return true;
    case FrameClass::Euclidean:
      for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
          if (has(a, b))
            for (int c = 0; c < n; c++)
              if (has(a, c) && !has(b, c)) return false;
      return true;
    case FrameClass::Equivalence:
      return rel_mask_in_class(mask, n, FrameClass::Reflexive) &&
             rel_mask_in_class(mask, n, FrameClass::Symmetric) &&
             rel_mask_in_class(mask, n, FrameClass::Transitive);
    case FrameClass::ReflexiveTransitive:
      return rel_mask_in_class(mask, n, FrameClass::Reflexive) &&
             rel_mask_in_class(mask, n, FrameClass::Transitive);
  }
  return false;
}

std::vector<std::uint32_t> relation_masks(int n, FrameClass cls) {
  std::vector<std::uint32_t> out;
  std::uint32_t total = 1u << (n * n);
  for (std::uint32_t m = 0; m < total; m++)
    if (rel_mask_in_class(m, n, cls)) out.push_back(m);
  return out;
}

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; i++) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint32_t permute_rel(std::uint32_t mask, int n, const std::vector<int>& p) {
  std::uint32_t out = 0;
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      if (mask_has(mask, n, a, b)) out |= 1u << (p[a] * n + p[b]);
  return out;
}

bool rels_canonical(const std::vector<std::uint32_t>& rels, int n,
                    const std::vector<std::vector<int>>& perms) {
  std::vector<std::uint32_t> other(rels.size());
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < rels.size(); i++) other[i] = permute_rel(rels[i], n, p);
    if (other < rels) return false;
  }
  return true;
}

// ---- model reconstruction for countermodels --------------------------------

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; i++) out.push_back(prefix + std::to_string(i));
  return out;
}

KripkeModel kripke_from_ctx(const Compiled& c, const KripkeCtx& m) {
  KripkeModel out;
  out.worlds = numbered("w", m.n);
  out.agents = c.agents;
  for (std::size_t a = 0; a < c.agents.size(); a++) {
    auto& dst = out.rel[c.agents[a]];
    for (int s = 0; s < m.n; s++)
      for (int t = 0; t < m.n; t++)
        if (m.succ[a][s] >> t & 1) dst.insert({s, t});
  }
  for (std::size_t i = 0; i < c.atoms.size(); i++) {
    auto& dst = out.val[c.atoms[i]];
    for (int s = 0; s < m.n; s++)
      if (m.val[i] >> s & 1) dst.insert(s);
  }
  return out;
}

FOEpistemicModel fo_from_ctx(const Compiled& c, const KripkeCtx& m) {
  FOEpistemicModel out;
  out.base = kripke_from_ctx(c, m);
  out.domain = numbered("v", m.nvalues);
  out.constants = c.constants;
  for (std::size_t i = 0; i < c.constants.size(); i++) {
    auto& dst = out.vc[c.constants[i]];
    for (int s = 0; s < m.n; s++) dst.push_back(m.vc[i][s]);
  }
  return out;
}

TernaryModel ternary_from_ctx(const Compiled& c, const TernCtx& m) {
  TernaryModel out;
  KripkeCtx base;
  base.n = m.n;
  base.succ = m.succ;
  base.val = m.val;
  out.base = kripke_from_ctx(c, base);
  out.constants = c.constants;
  int nc = static_cast<int>(c.constants.size());
  for (std::size_t a = 0; a < c.agents.size(); a++)
    for (int ci = 0; ci < nc; ci++) {
      auto& dst = out.tern[{c.agents[a], c.constants[ci]}];
      const auto& per = m.tern[m.pair_index(static_cast<int>(a), ci, nc)];
      for (int s = 0; s < m.n; s++)
        for (const auto& [u, v] : per[s]) dst.insert({s, u, v});
    }
  return out;
}

LtsModel lts_from_ctx(const Compiled& c, const LtsCtx& m, const std::vector<std::string>& actions) {
  LtsModel out;
  out.states = numbered("s", m.n);
  out.actions = actions;
  for (std::size_t a = 0; a < actions.size(); a++) {
    auto& dst = out.trans[actions[a]];
    for (int s = 0; s < m.n; s++)
      for (int t = 0; t < m.n; t++)
        if (m.img[a][s] >> t & 1) dst.insert({s, t});
  }
  for (std::size_t i = 0; i < c.atoms.size(); i++) {
    auto& dst = out.val[c.atoms[i]];
    for (int s = 0; s < m.n; s++)
      if (m.val[i] >> s & 1) dst.insert(s);
  }
  return out;
}

// ---- enumeration drivers ----------------------------------------------------

enum class EnumKind { Kripke, Fo, Ternary, Lts };

EnumKind kind_for(const Formula& f) {
  if (operators_within(f, {Op::K, Op::Kw, Op::Box, Op::Announce, Op::AnnounceWhether}))
    return EnumKind::Kripke;
  if (operators_within(f, {Op::K, Op::Kw, Op::Kv, Op::Announce, Op::AnnounceWhether, Op::Inspect}))
    return EnumKind::Fo;
  if (operators_within(f, {Op::Box, Op::DiaC, Op::DiaC2})) return EnumKind::Ternary;
  if (operators_within(f, {Op::Kh})) return EnumKind::Lts;
  throw FragmentMismatch("no model kind fits formula " + to_string(f) + " (fragment " +
                         std::string(to_string(fragment(f))) + ")");
}

void check_world_budget(const SearchBudget& b, int limit, const char* kind) {
  if (b.max_worlds < 1) throw BudgetError("budget must allow at least one world");
  if (b.max_worlds > limit)
    throw BudgetError(std::string("enumeration of ") + kind + " models supports at most " +
                      std::to_string(limit) + " worlds");
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, std::uint64_t lim) {
  if (a == 0 || b == 0) return 0;
  if (a > lim / b) return lim + 1;
  return std::min(a * b, lim + 1);
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t lim) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; i++) r = sat_mul(r, base, lim);
  return r;
}

// want_true == false: hunt for a falsifying world (validity); want_true ==
// true: hunt for a satisfying one.
struct Outcome {
  bool found = false;
  Countermodel model;
  std::uint64_t examined = 0;
};

template <typename MakeJson, typename EvalFn>
bool scan_valuations(const Compiled& c, int n, std::uint64_t* examined, bool want_true,
                     std::vector<std::uint32_t>* val, EvalFn&& eval_full,
                     MakeJson&& make_json, Outcome* out) {
  int bits = n * static_cast<int>(c.atoms.size());
  std::uint64_t total = std::uint64_t{1} << bits;
  std::uint32_t wmask = (1u << n) - 1;
  for (std::uint64_t v = 0; v < total; v++) {
    for (std::size_t i = 0; i < c.atoms.size(); i++)
      (*val)[i] = static_cast<std::uint32_t>(v >> (i * n)) & wmask;
    (*examined)++;
    std::uint32_t truth = eval_full();
    std::uint32_t hits = want_true ? truth : (wmask & ~truth);
    if (hits) {
      int w = __builtin_ctz(hits);
      out->found = true;
      out->model = make_json(w);
      out->examined = *examined;
      return true;
    }
  }
  return false;
}

Outcome run_kripke(const Compiled& c, FrameClass cls, const SearchBudget& b, bool want_true,
                   bool fo) {
  check_world_budget(b, kMaxEnumWorlds, fo ? "fo" : "kripke");
  int na = static_cast<int>(c.agents.size());
  int nc = static_cast<int>(c.constants.size());
  int nv = fo ? std::max(1, b.max_values) : 1;

  // Budget precheck on the raw (pre-canonicalization) count.
  std::uint64_t total = 0;
  for (int n = 1; n <= b.max_worlds; n++) {
    std::uint64_t rels = static_cast<std::uint64_t>(relation_masks(n, cls).size());
    std::uint64_t t = sat_pow(rels, na, b.cap);
    std::uint64_t vcs = fo ? sat_pow(nv, static_cast<std::uint64_t>(nc) * n, b.cap) : 1;
    std::uint64_t vals = sat_pow(2, static_cast<std::uint64_t>(n) * c.atoms.size(), b.cap);
    total = std::min(total + sat_mul(sat_mul(t, vcs, b.cap), vals, b.cap), b.cap + 1);
    if (total > b.cap)
      throw BudgetError("enumeration would exceed the cap of " + std::to_string(b.cap) +
                        " instances");
  }

  Outcome out;
  std::uint64_t examined = 0;
  for (int n = 1; n <= b.max_worlds; n++) {
    auto rels = relation_masks(n, cls);
    auto perms = permutations(n);
    KripkeCtx m;
    m.n = n;
    m.succ.assign(na, std::vector<std::uint32_t>(n, 0));
    m.val.assign(c.atoms.size(), 0);
    m.nvalues = nv;
    m.vc.assign(nc, std::vector<std::uint8_t>(n, 0));
    m.val_mask.assign(nc, std::vector<std::uint32_t>(nv, 0));
    FlatEval ev(c, m);

    std::vector<std::size_t> rel_idx(std::max(na, 1), 0);
    std::vector<std::uint32_t> structure(na, rels.empty() ? 0 : rels[0]);
    bool more = true;
    while (more) {
      bool canonical = na == 0 || rels_canonical(structure, n, perms);
      if (canonical) {
        for (int a = 0; a < na; a++)
          for (int s = 0; s < n; s++) {
            std::uint32_t mask = 0;
            for (int t = 0; t < n; t++)
              if (mask_has(structure[a], n, s, t)) mask |= 1u << t;
            m.succ[a][s] = mask;
          }
        // vc odometer
        std::vector<int> vdig(std::max(nc, 1) * n, 0);
        bool more_vc = true;
        while (more_vc) {
          if (fo && nc > 0) {
            for (int ci = 0; ci < nc; ci++) {
              std::fill(m.val_mask[ci].begin(), m.val_mask[ci].end(), 0);
              for (int s = 0; s < n; s++) {
                int v = vdig[ci * n + s];
                m.vc[ci][s] = static_cast<std::uint8_t>(v);
                m.val_mask[ci][v] |= 1u << s;
              }
            }
          }
          auto make = [&](int w) {
            nlohmann::json j = fo ? to_json(fo_from_ctx(c, m)) : to_json(kripke_from_ctx(c, m));
            return Countermodel{j, "w" + std::to_string(w)};
          };
          auto eval_full = [&]() {
            ev.reset();
            return ev.truth(c.root, (1u << n) - 1);
          };
          if (scan_valuations(c, n, &examined, want_true, &m.val, eval_full, make, &out))
            return out;
          if (!fo || nc == 0) break;
          more_vc = false;
          for (int d = static_cast<int>(vdig.size()) - 1; d >= 0; d--) {
            if (++vdig[d] < nv) { more_vc = true; break; }
            vdig[d] = 0;
          }
        }
      }
      // next relation combo
      more = false;
      for (int d = na - 1; d >= 0; d--) {
        if (++rel_idx[d] < rels.size()) {
          structure[d] = rels[rel_idx[d]];
          more = true;
          break;
        }
        rel_idx[d] = 0;
        structure[d] = rels.empty() ? 0 : rels[0];
      }
      if (na == 0) break;
    }
  }
  out.examined = examined;
  return out;
}

// Ternary relations per source world that satisfy symmetry + inclusion +
// anti-euclideanness, given the world's successor set.
std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>> legal_source_relations(
    std::uint32_t succ_mask, int n) {
  std::vector<int> succ;
  for (int t = 0; t < n; t++)
    if (succ_mask >> t & 1) succ.push_back(t);
  std::vector<std::pair<int, int>> slots;  // unordered pairs, u <= v
  for (std::size_t i = 0; i < succ.size(); i++)
    for (std::size_t j = i; j < succ.size(); j++) slots.push_back({succ[i], succ[j]});

  std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>> out;
  for (std::uint32_t pick = 0; pick < (1u << slots.size()); pick++) {
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
    for (std::size_t i = 0; i < slots.size(); i++) {
      if (!(pick >> i & 1)) continue;
      auto [u, v] = slots[i];
      pairs.push_back({static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)});
      if (u != v) pairs.push_back({static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(u)});
    }
    auto has = [&pairs](int u, int v) {
      for (const auto& [a, b] : pairs)
        if (a == u && b == v) return true;
      return false;
    };
    bool ok = true;
    for (const auto& [t1, t2] : pairs) {
      for (int u : succ)
        if (!has(u, t1) && !has(u, t2)) { ok = false; break; }
      if (!ok) break;
    }
    if (ok) {
      std::sort(pairs.begin(), pairs.end());
      out.push_back(std::move(pairs));
    }
  }
  return out;
}

using TernEncoding = std::vector<std::array<std::uint8_t, 3>>;

TernEncoding encode_tern(const TernCtx& m) {
  TernEncoding enc;
  for (const auto& per : m.tern)
    for (int s = 0; s < m.n; s++)
      for (const auto& [u, v] : per[s])
        enc.push_back({static_cast<std::uint8_t>(s), u, v});
  return enc;
}

Outcome run_ternary(const Compiled& c, FrameClass cls, const SearchBudget& b, bool want_true) {
  check_world_budget(b, 3, "ternary");
  int na = static_cast<int>(c.agents.size());
  int nc = static_cast<int>(c.constants.size());
  if (na == 0 || nc == 0)
    throw FragmentMismatch("ternary enumeration needs at least one agent and constant");

  Outcome out;
  std::uint64_t examined = 0;
  for (int n = 1; n <= b.max_worlds; n++) {
    auto rels = relation_masks(n, cls);
    auto perms = permutations(n);
    TernCtx m;
    m.n = n;
    m.succ.assign(na, std::vector<std::uint32_t>(n, 0));
    m.val.assign(c.atoms.size(), 0);
    m.tern.assign(static_cast<std::size_t>(na) * nc,
                  std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>>(n));
    FlatTernEval ev(c, m);

    std::vector<std::size_t> rel_idx(na, 0);
    std::vector<std::uint32_t> structure(na, rels[0]);
    bool more = true;
    while (more) {
      for (int a = 0; a < na; a++)
        for (int s = 0; s < n; s++) {
          std::uint32_t mask = 0;
          for (int t = 0; t < n; t++)
            if (mask_has(structure[a], n, s, t)) mask |= 1u << t;
          m.succ[a][s] = mask;
        }
      // candidate ternary relations per (agent, constant, world)
      std::vector<std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>>> cands;
      for (int a = 0; a < na; a++) {
        auto per_world = std::vector<std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>>>();
        for (int s = 0; s < n; s++) per_world.push_back(legal_source_relations(m.succ[a][s], n));
        for (int ci = 0; ci < nc; ci++)
          for (int s = 0; s < n; s++) cands.push_back(per_world[s]);
      }
      int positions = static_cast<int>(cands.size());  // na * nc * n
      std::vector<std::size_t> digit(positions, 0);
      bool more_tern = true;
      while (more_tern) {
        int pos = 0;
        for (int a = 0; a < na; a++)
          for (int ci = 0; ci < nc; ci++)
            for (int s = 0; s < n; s++)
              m.tern[m.pair_index(a, ci, nc)][s] = cands[pos][digit[pos]], pos++;

        // canonicality of (rel, tern) under world renaming
        bool canonical = true;
        TernEncoding self = encode_tern(m);
        std::vector<std::uint32_t> rel_enc = structure;
        for (const auto& p : perms) {
          std::vector<std::uint32_t> rp(na);
          for (int a = 0; a < na; a++) rp[a] = permute_rel(structure[a], n, p);
          if (rp > rel_enc) continue;
          TernCtx pm;
          pm.n = n;
          pm.tern.assign(static_cast<std::size_t>(na) * nc,
                         std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>>(n));
          for (int a = 0; a < na; a++)
            for (int ci = 0; ci < nc; ci++)
              for (int s = 0; s < n; s++)
                for (const auto& [u, v] : m.tern[m.pair_index(a, ci, nc)][s]) {
                  auto& dst = pm.tern[pm.pair_index(a, ci, nc)][p[s]];
                  dst.push_back({static_cast<std::uint8_t>(p[u]), static_cast<std::uint8_t>(p[v])});
                }
          for (auto& per : pm.tern)
            for (auto& lst : per) std::sort(lst.begin(), lst.end());
          TernEncoding pe = encode_tern(pm);
          if (std::make_pair(rp, pe) < std::make_pair(rel_enc, self)) {
            canonical = false;
            break;
          }
        }

        if (canonical) {
          auto make = [&](int w) {
            return Countermodel{to_json(ternary_from_ctx(c, m)), "w" + std::to_string(w)};
          };
          auto eval_full = [&]() {
            ev.reset();
            return ev.truth(c.root);
          };
          if (scan_valuations(c, n, &examined, want_true, &m.val, eval_full, make, &out))
            return out;
          if (examined > b.cap)
            throw BudgetError("enumeration exceeded the cap of " + std::to_string(b.cap) +
                              " instances");
        }

        more_tern = false;
        for (int d = positions - 1; d >= 0; d--) {
          if (++digit[d] < cands[d].size()) { more_tern = true; break; }
          digit[d] = 0;
        }
      }
      more = false;
      for (int d = na - 1; d >= 0; d--) {
        if (++rel_idx[d] < rels.size()) {
          structure[d] = rels[rel_idx[d]];
          more = true;
          break;
        }
        rel_idx[d] = 0;
        structure[d] = rels[0];
      }
    }
  }
  out.examined = examined;
  return out;
}

Outcome run_lts(const Compiled& c, const SearchBudget& b, bool want_true) {
  check_world_budget(b, kMaxEnumWorlds, "lts");
  int nact = std::max(1, b.max_actions);
  if (nact > 8) throw BudgetError("at most 8 actions supported");
  std::vector<std::string> actions;
  for (int a = 0; a < nact; a++) actions.push_back(std::string(1, static_cast<char>('a' + a)));

  // Budget precheck on the raw (pre-canonicalization) count.
  std::uint64_t total = 0;
  for (int n = 1; n <= b.max_worlds; n++) {
    std::uint64_t structures = sat_pow(sat_pow(2, n * n, b.cap), nact, b.cap);
    std::uint64_t vals = sat_pow(2, static_cast<std::uint64_t>(n) * c.atoms.size(), b.cap);
    total = std::min(total + sat_mul(structures, vals, b.cap), b.cap + 1);
    if (total > b.cap)
      throw BudgetError("enumeration would exceed the cap of " + std::to_string(b.cap) +
                        " instances");
  }

  Outcome out;
  std::uint64_t examined = 0;
  for (int n = 1; n <= b.max_worlds; n++) {
    auto perms = permutations(n);
    auto action_perms = permutations(nact);
    LtsCtx m;
    m.n = n;
    m.img.assign(nact, std::vector<std::uint32_t>(n, 0));
    m.val.assign(c.atoms.size(), 0);
    FlatLtsEval ev(c, m);

    std::uint64_t rel_total = std::uint64_t{1} << (n * n);
    std::vector<std::uint64_t> structure(nact, 0);
    bool more = true;
    while (more) {
      // canonical under state renaming and action renaming
      bool canonical = true;
      for (const auto& ap : action_perms) {
        for (const auto& p : perms) {
          std::vector<std::uint64_t> other(nact);
          for (int a = 0; a < nact; a++)
            other[a] = permute_rel(static_cast<std::uint32_t>(structure[ap[a]]), n, p);
          if (other < structure) { canonical = false; break; }
        }
        if (!canonical) break;
      }

      if (canonical) {
        for (int a = 0; a < nact; a++)
          for (int s = 0; s < n; s++) {
            std::uint32_t mask = 0;
            for (int t = 0; t < n; t++)
              if (mask_has(static_cast<std::uint32_t>(structure[a]), n, s, t)) mask |= 1u << t;
            m.img[a][s] = mask;
          }
        auto make = [&](int w) {
          return Countermodel{to_json(lts_from_ctx(c, m, actions)), "s" + std::to_string(w)};
        };
        auto eval_full = [&]() {
          ev.reset();
          return ev.truth(c.root);
        };
        if (scan_valuations(c, n, &examined, want_true, &m.val, eval_full, make, &out))
          return out;
      }

      more = false;
      for (int d = nact - 1; d >= 0; d--) {
        if (++structure[d] < rel_total) { more = true; break; }
        structure[d] = 0;
      }
    }
  }
  out.examined = examined;
  return out;
}

Outcome run(const Formula& f, FrameClass cls, const SearchBudget& b, bool want_true) {
  Compiled c = compile(f);
  switch (kind_for(f)) {
    case EnumKind::Kripke: return run_kripke(c, cls, b, want_true, false);
    case EnumKind::Fo: return run_kripke(c, cls, b, want_true, true);
    case EnumKind::Ternary: return run_ternary(c, cls, b, want_true);
    case EnumKind::Lts: return run_lts(c, b, want_true);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Verdict valid(const Formula& f, FrameClass cls, const SearchBudget& budget) {
  Outcome o = run(f, cls, budget, /*want_true=*/false);
  Verdict v;
  v.models_examined = o.examined;
  if (o.found) {
    v.valid = false;
    v.counter = o.model;
  } else {
    v.valid = true;
  }
  return v;
}

SatVerdict sat_search(const Formula& f, const SearchBudget& budget) {
  Outcome o = run(f, FrameClass::Arbitrary, budget, /*want_true=*/true);
  SatVerdict v;
  v.models_examined = o.examined;
  if (o.found) {
    v.satisfiable = true;
    v.witness = o.model;
  }
  return v;
}

Verdict frame_valid(const KripkeModel& frame, const Formula& f) {
  if (!operators_within(f, {Op::K, Op::Kw, Op::Box, Op::Announce, Op::AnnounceWhether}))
    throw FragmentMismatch("frame validity is defined for formulas over Kripke frames");
  int n = static_cast<int>(frame.worlds.size());
  if (n > kMaxFlatWorlds) throw BudgetError("frame too large");
  Compiled c = compile(f);
  for (const auto& a : c.agents)
    if (!frame.has_agent(a)) throw EvalError("unknown agent '" + a + "'");

  KripkeCtx m;
  m.n = n;
  m.succ.assign(c.agents.size(), std::vector<std::uint32_t>(n, 0));
  for (std::size_t a = 0; a < c.agents.size(); a++)
    for (const auto& [s, t] : frame.relation(c.agents[a])) m.succ[a][s] |= 1u << t;
  m.val.assign(c.atoms.size(), 0);
  FlatEval ev(c, m);

  Verdict v;
  int bits = n * static_cast<int>(c.atoms.size());
  if (bits > 62) throw BudgetError("too many valuations to enumerate");
  std::uint64_t total = std::uint64_t{1} << bits;
  std::uint32_t wmask = (1u << n) - 1;
  for (std::uint64_t vv = 0; vv < total; vv++) {
    for (std::size_t i = 0; i < c.atoms.size(); i++)
      m.val[i] = static_cast<std::uint32_t>(vv >> (i * n)) & wmask;
    v.models_examined++;
    ev.reset();
    std::uint32_t truth = ev.truth(c.root, wmask);
    std::uint32_t miss = wmask & ~truth;
    if (miss) {
      int w = __builtin_ctz(miss);
      KripkeModel witness = frame;
      witness.val.clear();
      for (std::size_t i = 0; i < c.atoms.size(); i++) {
        auto& dst = witness.val[c.atoms[i]];
        for (int s = 0; s < n; s++)
          if (m.val[i] >> s & 1) dst.insert(s);
      }
      v.valid = false;
      v.counter = Countermodel{to_json(witness), frame.worlds[w]};
      return v;
    }
  }
  v.valid = true;
  return v;
}

}  // namespace knowwh
