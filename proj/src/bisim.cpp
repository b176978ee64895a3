#include "knowwh/bisim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace knowwh {

namespace {

std::set<std::string> all_atoms(const KripkeModel& m) {
  std::set<std::string> out;
  for (const auto& [prop, ws] : m.val) out.insert(prop);
  return out;
}

bool same_valuation(const KripkeModel& a, int s, const KripkeModel& b, int t,
                    const std::set<std::string>& atoms) {
  for (const auto& p : atoms)
    if (a.val_at(p, s) != b.val_at(p, t)) return false;
  return true;
}

using Rel = std::set<std::pair<int, int>>;

bool zig_ok(const std::set<int>& from, const std::set<int>& to, const Rel& z, bool flipped) {
  for (int t : from) {
    bool matched = false;
    for (int t2 : to) {
      bool in = flipped ? z.count({t2, t}) != 0 : z.count({t, t2}) != 0;
      if (in) { matched = true; break; }
    }
    if (!matched) return false;
  }
  return true;
}

// Delta guard: s has two different successors not related by z.
bool delta_guard(const std::set<int>& succ, const Rel& z) {
  for (int t1 : succ)
    for (int t2 : succ)
      if (t1 != t2 && !z.count({t1, t2})) return true;
  return false;
}

bool pair_violates(const KripkeModel& m, int s, int s2, const Rel& z, BisimKind kind) {
  for (const auto& agent : m.agents) {
    std::set<int> sa = m.successors(agent, s);
    std::set<int> sb = m.successors(agent, s2);
    bool zig = kind == BisimKind::Standard || delta_guard(sa, z);
    bool zag = kind == BisimKind::Standard || delta_guard(sb, z);
    if (zig && !zig_ok(sa, sb, z, false)) return true;
    if (zag && !zig_ok(sb, sa, z, true)) return true;
  }
  return false;
}

}  // namespace

std::set<std::pair<int, int>> max_bisim(const KripkeModel& m, BisimKind kind) {
  int n = static_cast<int>(m.worlds.size());
  std::set<std::string> atoms = all_atoms(m);
  Rel z;
  for (int s = 0; s < n; s++)
    for (int t = 0; t < n; t++)
      if (same_valuation(m, s, m, t, atoms)) z.insert({s, t});

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, int>> drop;
    for (const auto& [s, t] : z)
      if (pair_violates(m, s, t, z, kind)) drop.push_back({s, t});
    for (const auto& p : drop) z.erase(p);
    changed = !drop.empty();
  }

  // The defining conditions must hold of the fixpoint; surface any failure
  // rather than patching it up.
  for (const auto& [s, t] : z) {
    if (!same_valuation(m, s, m, t, atoms) || pair_violates(m, s, t, z, kind))
      throw std::logic_error("bisimulation fixpoint failed verification");
  }
  return z;
}

BisimResult check_bisim(const KripkeModel& m1, const std::string& s1, const KripkeModel& m2,
                        const std::string& s2, BisimKind kind) {
  m1.require_world(s1);
  m2.require_world(s2);
  BisimResult out;
  if (kind == BisimKind::Standard) {
    // Greatest cross-model bisimulation, by the same deletion scheme.
    int n1 = static_cast<int>(m1.worlds.size());
    int n2 = static_cast<int>(m2.worlds.size());
    std::set<std::string> atoms = all_atoms(m1);
    for (const auto& p : all_atoms(m2)) atoms.insert(p);
    std::set<std::string> agents(m1.agents.begin(), m1.agents.end());
    for (const auto& a : m2.agents) agents.insert(a);
    Rel z;
    for (int s = 0; s < n1; s++)
      for (int t = 0; t < n2; t++)
        if (same_valuation(m1, s, m2, t, atoms)) z.insert({s, t});
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<int, int>> drop;
      for (const auto& [s, t] : z) {
        bool bad = false;
        for (const auto& agent : agents) {
          if (!zig_ok(m1.successors(agent, s), m2.successors(agent, t), z, false) ||
              !zig_ok(m2.successors(agent, t), m1.successors(agent, s), z, true)) {
            bad = true;
            break;
          }
        }
        if (bad) drop.push_back({s, t});
      }
      for (const auto& p : drop) z.erase(p);
      changed = !drop.empty();
    }
    out.related = z.count({m1.world_index(s1), m2.world_index(s2)}) != 0;
    if (out.related)
      for (const auto& [s, t] : z) out.witness.push_back({m1.worlds[s], m2.worlds[t]});
    return out;
  }

  DisjointUnion u = disjoint_union(m1, m2);
  Rel z = max_bisim(u.model, BisimKind::Delta);
  int a = u.model.world_index(u.left.at(s1));
  int b = u.model.world_index(u.right.at(s2));
  out.related = z.count({a, b}) != 0;
  if (out.related)
    for (const auto& [s, t] : z)
      out.witness.push_back({u.model.worlds[s], u.model.worlds[t]});
  return out;
}

bool ncl_equiv_bounded(const KripkeModel& m1, const std::string& s1, const KripkeModel& m2,
                       const std::string& s2, int depth,
                       const std::set<std::string>& letters) {
  DisjointUnion u = disjoint_union(m1, m2);
  const KripkeModel& m = u.model;
  int n = static_cast<int>(m.worlds.size());

  // Depth-0 classes: agreement on the letters.
  std::vector<int> block(n);
  {
    std::map<std::vector<bool>, int> ids;
    for (int s = 0; s < n; s++) {
      std::vector<bool> sig;
      for (const auto& p : letters) sig.push_back(m.val_at(p, s));
      block[s] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
    }
  }

  // One round per modal depth. Two worlds stay together iff they hit the
  // same set of blocks per agent, or both hit at most one block (a world
  // with at most one successor class satisfies every Kw formula).
  for (int d = 0; d < depth; d++) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int s = 0; s < n; s++) {
      std::vector<int> sig{block[s]};
      for (const auto& agent : m.agents) {
        std::set<int> hit;
        for (int t : m.successors(agent, s)) hit.insert(block[t]);
        sig.push_back(-1);  // separator
        if (hit.size() >= 2)
          sig.insert(sig.end(), hit.begin(), hit.end());
      }
      next[s] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
    }
    if (next == block) break;
    block = next;
  }

  int a = m.world_index(u.left.at(s1));
  int b = m.world_index(u.right.at(s2));
  return block[a] == block[b];
}

}  // namespace knowwh
