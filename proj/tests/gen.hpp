#ifndef KNOWWH_TESTS_GEN_HPP
#define KNOWWH_TESTS_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "knowwh/formula.hpp"
#include "knowwh/model.hpp"

namespace gen {

using knowwh::Formula;

struct Rng {
  std::mt19937 eng;
  explicit Rng(unsigned seed) : eng(seed) {}
  int upto(int n) { return static_cast<int>(eng() % static_cast<unsigned>(n)); }
  bool coin() { return upto(2) == 0; }
  bool chance(int pct) { return upto(100) < pct; }
};

enum class Family { Bool, El, Ncl, NclPal, Ml, BoxKw, Elkvr, Pilkv, Palkvr, Mlkv, Lkh };

inline Formula formula(Rng& r, Family fam, int depth,
                       const std::vector<std::string>& atoms = {"p", "q"},
                       const std::vector<std::string>& agents = {"i"},
                       const std::vector<std::string>& consts = {"c"}) {
  auto atom = [&] {
    switch (r.upto(static_cast<int>(atoms.size()) + 2)) {
      case 0: return Formula::top();
      case 1: return Formula::bottom();
      default: return Formula::atom(atoms[r.upto(static_cast<int>(atoms.size()))]);
    }
  };
  if (depth == 0 || r.chance(30)) return atom();
  auto sub = [&] { return formula(r, fam, depth - 1, atoms, agents, consts); };
  const std::string& ag = agents[r.upto(static_cast<int>(agents.size()))];
  const std::string& c = consts[r.upto(static_cast<int>(consts.size()))];
  int b = r.upto(10);
  if (b == 0) return Formula::neg(sub());
  if (b == 1) return Formula::conj(sub(), sub());
  if (b == 2) return Formula::disj(sub(), sub());
  if (b == 3) return Formula::impl(sub(), sub());
  if (b == 4) return Formula::iff(sub(), sub());
  switch (fam) {
    case Family::Bool:
      return Formula::neg(sub());
    case Family::El:
      return Formula::k(ag, sub());
    case Family::Ncl:
      return Formula::kw(ag, sub());
    case Family::NclPal:
      switch (r.upto(3)) {
        case 0: return Formula::kw(ag, sub());
        case 1: return Formula::announce(sub(), sub());
        default: return Formula::announce_whether(sub(), sub());
      }
    case Family::Ml:
      return Formula::box(ag, sub());
    case Family::BoxKw:
      return r.coin() ? Formula::box(ag, sub()) : Formula::kw(ag, sub());
    case Family::Elkvr:
      return r.coin() ? Formula::k(ag, sub()) : Formula::kv(ag, sub(), c);
    case Family::Pilkv:
      switch (r.upto(3)) {
        case 0: return Formula::k(ag, sub());
        case 1: return Formula::kv(ag, sub(), c);
        default: return Formula::inspect(c, sub());
      }
    case Family::Palkvr:
      switch (r.upto(3)) {
        case 0: return Formula::k(ag, sub());
        case 1: return Formula::kv(ag, sub(), c);
        default: return Formula::announce(sub(), sub());
      }
    case Family::Mlkv:
      switch (r.upto(3)) {
        case 0: return Formula::box(ag, sub());
        case 1: return Formula::dia_c(ag, c, sub());
        default: return Formula::dia_c2(ag, c, sub(), sub());
      }
    case Family::Lkh:
      return Formula::kh(sub(), sub());
  }
  return atom();
}

inline knowwh::KripkeModel kripke(Rng& r, int max_worlds,
                                  const std::vector<std::string>& agents = {"i"},
                                  const std::vector<std::string>& atoms = {"p", "q"},
                                  bool reflexive = false) {
  knowwh::KripkeModel m;
  int n = 1 + r.upto(max_worlds);
  for (int i = 0; i < n; i++) m.worlds.push_back("w" + std::to_string(i));
  m.agents = agents;
  for (const auto& a : agents) {
    auto& rel = m.rel[a];
    for (int s = 0; s < n; s++)
      for (int t = 0; t < n; t++)
        if (r.chance(35)) rel.insert({s, t});
    if (reflexive)
      for (int s = 0; s < n; s++) rel.insert({s, s});
  }
  for (const auto& p : atoms) {
    auto& ws = m.val[p];
    for (int s = 0; s < n; s++)
      if (r.coin()) ws.insert(s);
  }
  return m;
}

// Random partition into equivalence classes per agent.
inline knowwh::KripkeModel equivalence_kripke(Rng& r, int max_worlds,
                                              const std::vector<std::string>& agents,
                                              const std::vector<std::string>& atoms) {
  knowwh::KripkeModel m = kripke(r, max_worlds, agents, atoms);
  int n = static_cast<int>(m.worlds.size());
  for (const auto& a : agents) {
    std::vector<int> cls(n);
    for (int s = 0; s < n; s++) cls[s] = r.upto(n);
    auto& rel = m.rel[a];
    rel.clear();
    for (int s = 0; s < n; s++)
      for (int t = 0; t < n; t++)
        if (cls[s] == cls[t]) rel.insert({s, t});
  }
  return m;
}

inline knowwh::FOEpistemicModel fo(Rng& r, int max_worlds, int values,
                                   const std::vector<std::string>& agents = {"i"},
                                   const std::vector<std::string>& atoms = {"p", "q"},
                                   const std::vector<std::string>& consts = {"c"},
                                   bool equivalence = false) {
  knowwh::FOEpistemicModel m;
  m.base = equivalence ? equivalence_kripke(r, max_worlds, agents, atoms)
                       : kripke(r, max_worlds, agents, atoms);
  for (int v = 0; v < values; v++) m.domain.push_back("v" + std::to_string(v));
  m.constants = consts;
  int n = static_cast<int>(m.base.worlds.size());
  for (const auto& c : consts) {
    auto& vals = m.vc[c];
    for (int s = 0; s < n; s++) vals.push_back(r.upto(values));
  }
  return m;
}

inline knowwh::LtsModel lts(Rng& r, int max_states, int actions = 2,
                            const std::vector<std::string>& atoms = {"p", "q"}) {
  knowwh::LtsModel m;
  int n = 1 + r.upto(max_states);
  for (int i = 0; i < n; i++) m.states.push_back("s" + std::to_string(i));
  for (int a = 0; a < actions; a++)
    m.actions.push_back(std::string(1, static_cast<char>('a' + a)));
  for (const auto& a : m.actions) {
    auto& tr = m.trans[a];
    for (int s = 0; s < n; s++)
      for (int t = 0; t < n; t++)
        if (r.chance(30)) tr.insert({s, t});
  }
  for (const auto& p : atoms) {
    auto& ws = m.val[p];
    for (int s = 0; s < n; s++)
      if (r.coin()) ws.insert(s);
  }
  return m;
}

// A ternary model obeying symmetry, inclusion and the anti-euclidean
// condition, sampled by rejection per source world.
inline knowwh::TernaryModel legal_ternary(Rng& r, int max_worlds,
                                          const std::vector<std::string>& agents = {"i"},
                                          const std::vector<std::string>& atoms = {"p", "q"},
                                          const std::vector<std::string>& consts = {"c"}) {
  knowwh::TernaryModel m;
  m.base = kripke(r, max_worlds, agents, atoms);
  m.constants = consts;
  int n = static_cast<int>(m.base.worlds.size());
  for (const auto& a : agents) {
    for (const auto& c : consts) {
      auto& triples = m.tern[{a, c}];
      for (int s = 0; s < n; s++) {
        std::vector<int> succ;
        for (int t : m.base.successors(a, s)) succ.push_back(t);
        if (succ.empty()) continue;
        for (int attempt = 0; attempt < 20; attempt++) {
          std::set<std::pair<int, int>> pairs;
          for (std::size_t i = 0; i < succ.size(); i++)
            for (std::size_t j = i; j < succ.size(); j++)
              if (r.chance(30)) {
                pairs.insert({succ[i], succ[j]});
                pairs.insert({succ[j], succ[i]});
              }
          bool ok = true;
          for (const auto& [t1, t2] : pairs) {
            for (int w : succ)
              if (!pairs.count({w, t1}) && !pairs.count({w, t2})) { ok = false; break; }
            if (!ok) break;
          }
          if (ok) {
            for (const auto& [u, v] : pairs) triples.insert({s, u, v});
            break;
          }
        }
      }
    }
  }
  return m;
}

}  // namespace gen

#endif
