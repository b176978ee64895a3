#include "knowwh/model.hpp"

#include <algorithm>
#include <sstream>

namespace knowwh {

const char* to_string(FrameClass c) {
  switch (c) {
    case FrameClass::Arbitrary: return "arbitrary";
    case FrameClass::Serial: return "serial";
    case FrameClass::Reflexive: return "reflexive";
    case FrameClass::Transitive: return "transitive";
    case FrameClass::Symmetric: return "symmetric";
    case FrameClass::Euclidean: return "euclidean";
    case FrameClass::Equivalence: return "equivalence";
    case FrameClass::ReflexiveTransitive: return "reflexive-transitive";
  }
  return "?";
}

std::optional<FrameClass> frame_class_from_string(const std::string& name) {
  for (FrameClass c : {FrameClass::Arbitrary, FrameClass::Serial, FrameClass::Reflexive,
                       FrameClass::Transitive, FrameClass::Symmetric, FrameClass::Euclidean,
                       FrameClass::Equivalence, FrameClass::ReflexiveTransitive})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

int KripkeModel::world_index(const std::string& id) const {
  for (std::size_t i = 0; i < worlds.size(); i++)
    if (worlds[i] == id) return static_cast<int>(i);
  return -1;
}

int KripkeModel::require_world(const std::string& id) const {
  int i = world_index(id);
  if (i < 0) throw ModelError("unknown world '" + id + "'");
  return i;
}

bool KripkeModel::has_agent(const std::string& id) const {
  return std::find(agents.begin(), agents.end(), id) != agents.end();
}

const std::set<std::pair<int, int>>& KripkeModel::relation(const std::string& agent) const {
  static const std::set<std::pair<int, int>> empty;
  auto it = rel.find(agent);
  return it == rel.end() ? empty : it->second;
}

bool KripkeModel::sees(const std::string& agent, int from, int to) const {
  return relation(agent).count({from, to}) != 0;
}

std::set<int> KripkeModel::successors(const std::string& agent, int from) const {
  std::set<int> out;
  for (const auto& [a, b] : relation(agent))
    if (a == from) out.insert(b);
  return out;
}

bool KripkeModel::val_at(const std::string& prop, int world) const {
  auto it = val.find(prop);
  return it != val.end() && it->second.count(world) != 0;
}

void KripkeModel::validate() const {
  if (worlds.empty()) throw ModelError("model must be non-empty");
  std::set<std::string> seen(worlds.begin(), worlds.end());
  if (seen.size() != worlds.size()) throw ModelError("duplicate world id");
  std::set<std::string> ag(agents.begin(), agents.end());
  if (ag.size() != agents.size()) throw ModelError("duplicate agent id");
  int n = static_cast<int>(worlds.size());
  for (const auto& [agent, pairs] : rel) {
    if (!ag.count(agent)) throw ModelError("relation for undeclared agent '" + agent + "'");
    for (const auto& [a, b] : pairs)
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw ModelError("relation pair out of range for agent '" + agent + "'");
  }
  for (const auto& [prop, ws] : val)
    for (int w : ws)
      if (w < 0 || w >= n) throw ModelError("valuation of '" + prop + "' out of range");
}

bool FOEpistemicModel::has_constant(const std::string& c) const {
  return std::find(constants.begin(), constants.end(), c) != constants.end();
}

int FOEpistemicModel::value_of(const std::string& c, int world) const {
  auto it = vc.find(c);
  if (it == vc.end()) throw ModelError("unknown constant '" + c + "'");
  return it->second.at(static_cast<std::size_t>(world));
}

void FOEpistemicModel::validate() const {
  base.validate();
  if (domain.empty()) throw ModelError("value domain must be non-empty");
  std::set<std::string> dv(domain.begin(), domain.end());
  if (dv.size() != domain.size()) throw ModelError("duplicate value id");
  std::set<std::string> cs(constants.begin(), constants.end());
  if (cs.size() != constants.size()) throw ModelError("duplicate constant id");
  int nd = static_cast<int>(domain.size());
  for (const auto& c : constants) {
    auto it = vc.find(c);
    if (it == vc.end() || it->second.size() != base.worlds.size())
      throw ModelError("value assignment for '" + c + "' must be total");
    for (int v : it->second)
      if (v < 0 || v >= nd) throw ModelError("value of '" + c + "' outside the domain");
  }
  if (vc.size() != constants.size()) throw ModelError("value assignment for undeclared constant");
}

bool TernaryModel::has_constant(const std::string& c) const {
  return std::find(constants.begin(), constants.end(), c) != constants.end();
}

const std::set<std::array<int, 3>>& TernaryModel::triples(const std::string& agent,
                                                          const std::string& c) const {
  static const std::set<std::array<int, 3>> empty;
  auto it = tern.find({agent, c});
  return it == tern.end() ? empty : it->second;
}

void TernaryModel::validate() const {
  base.validate();
  std::set<std::string> cs(constants.begin(), constants.end());
  if (cs.size() != constants.size()) throw ModelError("duplicate constant id");
  int n = static_cast<int>(base.worlds.size());
  for (const auto& [key, triples] : tern) {
    if (!base.has_agent(key.first))
      throw ModelError("ternary relation for undeclared agent '" + key.first + "'");
    if (!cs.count(key.second))
      throw ModelError("ternary relation for undeclared constant '" + key.second + "'");
    for (const auto& t : triples)
      for (int w : t)
        if (w < 0 || w >= n) throw ModelError("ternary triple out of range");
  }
}

int LtsModel::state_index(const std::string& id) const {
  for (std::size_t i = 0; i < states.size(); i++)
    if (states[i] == id) return static_cast<int>(i);
  return -1;
}

int LtsModel::require_state(const std::string& id) const {
  int i = state_index(id);
  if (i < 0) throw ModelError("unknown state '" + id + "'");
  return i;
}

bool LtsModel::has_action(const std::string& a) const {
  return std::find(actions.begin(), actions.end(), a) != actions.end();
}

std::set<int> LtsModel::successors(const std::string& action, int from) const {
  std::set<int> out;
  auto it = trans.find(action);
  if (it == trans.end()) return out;
  for (const auto& [a, b] : it->second)
    if (a == from) out.insert(b);
  return out;
}

bool LtsModel::val_at(const std::string& prop, int state) const {
  auto it = val.find(prop);
  return it != val.end() && it->second.count(state) != 0;
}

void LtsModel::validate() const {
  if (states.empty()) throw ModelError("model must be non-empty");
  std::set<std::string> seen(states.begin(), states.end());
  if (seen.size() != states.size()) throw ModelError("duplicate state id");
  std::set<std::string> ac(actions.begin(), actions.end());
  if (ac.size() != actions.size()) throw ModelError("duplicate action id");
  int n = static_cast<int>(states.size());
  for (const auto& [action, pairs] : trans) {
    if (!ac.count(action)) throw ModelError("transitions for undeclared action '" + action + "'");
    for (const auto& [a, b] : pairs)
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw ModelError("transition to undeclared state");
  }
  for (const auto& [prop, ws] : val)
    for (int w : ws)
      if (w < 0 || w >= n) throw ModelError("valuation of '" + prop + "' out of range");
}

namespace {

bool relation_in_class(const std::set<std::pair<int, int>>& r, int n, FrameClass cls) {
  auto has = [&r](int a, int b) { return r.count({a, b}) != 0; };
  switch (cls) {
    case FrameClass::Arbitrary:
      return true;
    case FrameClass::Serial:
      for (int s = 0; s < n; s++) {
        bool any = false;
        for (int t = 0; t < n && !any; t++) any = has(s, t);
        if (!any) return false;
      }
      return true;
    case FrameClass::Reflexive:
      for (int s = 0; s < n; s++)
        if (!has(s, s)) return false;
      return true;
    case FrameClass::Transitive:
      for (const auto& [a, b] : r)
        for (int c = 0; c < n; c++)
          if (has(b, c) && !has(a, c)) return false;
      return true;
    case FrameClass::Symmetric:
      for (const auto& [a, b] : r)
        if (!has(b, a)) return false;
      return true;
    case FrameClass::Euclidean:
      for (const auto& [a, b] : r)
        for (int c = 0; c < n; c++)
          if (has(a, c) && !has(b, c)) return false;
      return true;
    case FrameClass::Equivalence:
      return relation_in_class(r, n, FrameClass::Reflexive) &&
             relation_in_class(r, n, FrameClass::Symmetric) &&
             relation_in_class(r, n, FrameClass::Transitive);
    case FrameClass::ReflexiveTransitive:
      return relation_in_class(r, n, FrameClass::Reflexive) &&
             relation_in_class(r, n, FrameClass::Transitive);
  }
  return false;
}

}  // namespace

bool check_frame(const KripkeModel& m, FrameClass cls) {
  int n = static_cast<int>(m.worlds.size());
  for (const auto& agent : m.agents)
    if (!relation_in_class(m.relation(agent), n, cls)) return false;
  return true;
}

DisjointUnion disjoint_union(const KripkeModel& m1, const KripkeModel& m2) {
  DisjointUnion out;
  std::set<std::string> used;
  for (const auto& w : m1.worlds) {
    out.model.worlds.push_back(w);
    out.left[w] = w;
    used.insert(w);
  }
  for (const auto& w : m2.worlds) {
    std::string fresh = w;
    while (used.count(fresh)) fresh += "'";
    out.model.worlds.push_back(fresh);
    out.right[w] = fresh;
    used.insert(fresh);
  }
  out.model.agents = m1.agents;
  for (const auto& a : m2.agents)
    if (!out.model.has_agent(a)) out.model.agents.push_back(a);

  int off = static_cast<int>(m1.worlds.size());
  for (const auto& [agent, pairs] : m1.rel) out.model.rel[agent] = pairs;
  for (const auto& [agent, pairs] : m2.rel)
    for (const auto& [a, b] : pairs) out.model.rel[agent].insert({a + off, b + off});
  for (const auto& [prop, ws] : m1.val) out.model.val[prop] = ws;
  for (const auto& [prop, ws] : m2.val)
    for (int w : ws) out.model.val[prop].insert(w + off);
  return out;
}

namespace {

std::vector<int> index_map(int n, const std::set<int>& keep) {
  std::vector<int> map(n, -1);
  int next = 0;
  for (int i = 0; i < n; i++)
    if (keep.count(i)) map[i] = next++;
  return map;
}

}  // namespace

KripkeModel restrict_model(const KripkeModel& m, const std::set<int>& keep) {
  int n = static_cast<int>(m.worlds.size());
  std::vector<int> map = index_map(n, keep);
  KripkeModel out;
  for (int i = 0; i < n; i++)
    if (map[i] >= 0) out.worlds.push_back(m.worlds[i]);
  out.agents = m.agents;
  for (const auto& [agent, pairs] : m.rel) {
    auto& dst = out.rel[agent];
    for (const auto& [a, b] : pairs)
      if (map[a] >= 0 && map[b] >= 0) dst.insert({map[a], map[b]});
  }
  for (const auto& [prop, ws] : m.val) {
    auto& dst = out.val[prop];
    for (int w : ws)
      if (map[w] >= 0) dst.insert(map[w]);
  }
  return out;
}

FOEpistemicModel restrict_model(const FOEpistemicModel& m, const std::set<int>& keep) {
  FOEpistemicModel out;
  out.base = restrict_model(m.base, keep);
  out.domain = m.domain;
  out.constants = m.constants;
  int n = static_cast<int>(m.base.worlds.size());
  for (const auto& [c, values] : m.vc) {
    auto& dst = out.vc[c];
    for (int i = 0; i < n; i++)
      if (keep.count(i)) dst.push_back(values[i]);
  }
  return out;
}

FOEpistemicModel inspect(const FOEpistemicModel& m, const std::string& c,
                         const std::string& s) {
  int si = m.base.require_world(s);
  if (!m.has_constant(c)) throw ModelError("unknown constant '" + c + "'");
  int want = m.value_of(c, si);
  std::set<int> keep;
  for (int i = 0; i < static_cast<int>(m.base.worlds.size()); i++)
    if (m.value_of(c, i) == want) keep.insert(i);
  return restrict_model(m, keep);
}

TernaryModel derive_ternary(const FOEpistemicModel& m) {
  TernaryModel out;
  out.base = m.base;
  out.constants = m.constants;
  for (const auto& agent : m.base.agents) {
    const auto& r = m.base.relation(agent);
    for (const auto& c : m.constants) {
      auto& triples = out.tern[{agent, c}];
      for (const auto& [s, u] : r)
        for (const auto& [s2, v] : r)
          if (s == s2 && m.value_of(c, u) != m.value_of(c, v)) triples.insert({s, u, v});
    }
  }
  return out;
}

std::string TernaryViolation::describe(const TernaryModel& m) const {
  const auto& w = m.base.worlds;
  std::ostringstream os;
  switch (condition) {
    case 1: os << "symmetry"; break;
    case 2: os << "inclusion"; break;
    case 3: os << "anti-euclidean"; break;
  }
  os << " violated for agent " << agent << ", constant " << constant << " at ("
     << w[triple[0]] << "," << w[triple[1]] << "," << w[triple[2]] << ")";
  if (extra_world >= 0) os << " with successor " << w[extra_world];
  return os.str();
}

TernaryReport check_ternary_conditions(const TernaryModel& m) {
  TernaryReport report;
  int n = static_cast<int>(m.base.worlds.size());
  for (const auto& [key, triples] : m.tern) {
    const auto& [agent, c] = key;
    const auto& r = m.base.relation(agent);
    for (const auto& t : triples) {
      auto [s, u, v] = t;
      if (!triples.count({s, v, u}))
        report.violations.push_back({1, agent, c, t, -1});
      if (!r.count({s, u}) || !r.count({s, v}))
        report.violations.push_back({2, agent, c, t, -1});
      for (int w = 0; w < n; w++) {
        if (!r.count({s, w})) continue;
        if (!triples.count({s, w, u}) && !triples.count({s, w, v}))
          report.violations.push_back({3, agent, c, t, w});
      }
    }
  }
  return report;
}

namespace fixtures {

KripkeModel model_a() {
  KripkeModel m;
  m.worlds = {"s", "t"};
  m.agents = {"i"};
  m.rel["i"] = {{0, 1}};
  m.val["p"] = {0, 1};
  return m;
}

KripkeModel model_b() {
  KripkeModel m;
  m.worlds = {"s'"};
  m.agents = {"i"};
  m.rel["i"] = {};
  m.val["p"] = {0};
  return m;
}

FOEpistemicModel model_kv() {
  FOEpistemicModel m;
  m.base.worlds = {"w1", "w2"};
  m.base.agents = {"1", "2"};
  m.base.rel["1"] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  m.base.rel["2"] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  m.base.val["p"] = {0, 1};
  m.domain = {"0", "1"};
  m.constants = {"c"};
  m.vc["c"] = {0, 1};
  return m;
}

LtsModel model_kh1() {
  LtsModel m;
  m.states = {"s1", "s2", "s3", "s4"};
  m.actions = {"a", "b"};
  m.trans["a"] = {{0, 1}, {0, 2}};
  m.trans["b"] = {{1, 3}};
  m.val["p"] = {0};
  m.val["q"] = {3};
  return m;
}

LtsModel model_kh2() {
  LtsModel m;
  m.states = {"s1", "s2", "s3", "s4", "s5", "s6"};
  m.actions = {"a", "b"};
  m.trans["a"] = {{0, 2}, {3, 5}};
  m.trans["b"] = {{1, 3}, {2, 4}};
  m.val["p"] = {0, 1};
  m.val["r"] = {0};
  m.val["q"] = {4, 5};
  return m;
}

LtsModel model_kh3() {
  LtsModel m;
  m.states = {"s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8"};
  m.actions = {"r", "u"};
  m.trans["r"] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  m.trans["u"] = {{1, 5}, {2, 6}, {3, 7}};
  m.val["p"] = {1, 2};
  m.val["q"] = {3, 6, 7};
  return m;
}

KripkeModel frame_f1() {
  KripkeModel m;
  m.worlds = {"s1", "t", "u"};
  m.agents = {"i"};
  m.rel["i"] = {{0, 1}, {1, 2}};
  return m;
}

KripkeModel frame_f2() {
  KripkeModel m;
  m.worlds = {"s2"};
  m.agents = {"i"};
  m.rel["i"] = {{0, 0}};
  return m;
}

}  // namespace fixtures

}  // namespace knowwh
