#include "knowwh/model_json.hpp"

#include <algorithm>

namespace knowwh {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw ModelError("unknown key '" + it.key() + "'");
  }
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ModelError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ModelError(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ModelError(std::string("missing key '") + key + "'");
  return *it;
}

std::set<std::pair<int, int>> pair_set(const json& j, const KripkeModel& m, const char* what) {
  if (!j.is_array()) throw ModelError(std::string(what) + " must be an array of pairs");
  std::set<std::pair<int, int>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ModelError(std::string(what) + " entries must be [from, to] id pairs");
    out.insert({m.require_world(e[0].get<std::string>()),
                m.require_world(e[1].get<std::string>())});
  }
  return out;
}

KripkeModel kripke_core(const json& j) {
  KripkeModel m;
  m.worlds = string_list(field(j, "worlds"), "worlds");
  if (m.worlds.empty()) throw ModelError("model must be non-empty");
  m.agents = string_list(field(j, "agents"), "agents");
  const json& rel = field(j, "rel");
  if (!rel.is_object()) throw ModelError("rel must be an object");
  for (auto it = rel.begin(); it != rel.end(); ++it) {
    if (!m.has_agent(it.key())) throw ModelError("relation for undeclared agent '" + it.key() + "'");
    m.rel[it.key()] = pair_set(it.value(), m, "rel");
  }
  const json& val = field(j, "val");
  if (!val.is_object()) throw ModelError("val must be an object");
  for (auto it = val.begin(); it != val.end(); ++it) {
    std::set<int> ws;
    for (const auto& w : string_list(it.value(), "val")) ws.insert(m.require_world(w));
    m.val[it.key()] = ws;
  }
  return m;
}

AnyModel parse_kripke(const json& j) {
  reject_unknown_keys(j, {"kind", "worlds", "agents", "rel", "val"});
  KripkeModel m = kripke_core(j);
  m.validate();
  return m;
}

AnyModel parse_fo(const json& j) {
  reject_unknown_keys(j, {"kind", "worlds", "agents", "rel", "val", "domain", "vc"});
  FOEpistemicModel m;
  m.base = kripke_core(j);
  m.domain = string_list(field(j, "domain"), "domain");
  const json& vc = field(j, "vc");
  if (!vc.is_object()) throw ModelError("vc must be an object");
  auto value_index = [&m](const std::string& v) {
    auto it = std::find(m.domain.begin(), m.domain.end(), v);
    if (it == m.domain.end()) throw ModelError("value '" + v + "' outside the domain");
    return static_cast<int>(it - m.domain.begin());
  };
  for (auto it = vc.begin(); it != vc.end(); ++it) {
    m.constants.push_back(it.key());
    if (!it.value().is_object())
      throw ModelError("vc entry for '" + it.key() + "' must map worlds to values");
    std::vector<int> values(m.base.worlds.size(), -1);
    for (auto w = it.value().begin(); w != it.value().end(); ++w) {
      if (!w.value().is_string()) throw ModelError("vc values must be strings");
      values[static_cast<std::size_t>(m.base.require_world(w.key()))] =
          value_index(w.value().get<std::string>());
    }
    for (int v : values)
      if (v < 0) throw ModelError("value assignment for '" + it.key() + "' must be total");
    m.vc[it.key()] = std::move(values);
  }
  m.validate();
  return m;
}

AnyModel parse_ternary(const json& j) {
  reject_unknown_keys(j, {"kind", "worlds", "agents", "rel", "val", "tern"});
  TernaryModel m;
  m.base = kripke_core(j);
  const json& tern = field(j, "tern");
  if (!tern.is_object()) throw ModelError("tern must be an object");
  for (auto it = tern.begin(); it != tern.end(); ++it) {
    auto comma = it.key().find(',');
    if (comma == std::string::npos)
      throw ModelError("tern keys must look like \"agent,constant\"");
    std::string agent = it.key().substr(0, comma);
    std::string c = it.key().substr(comma + 1);
    if (!m.base.has_agent(agent))
      throw ModelError("ternary relation for undeclared agent '" + agent + "'");
    if (!m.has_constant(c)) m.constants.push_back(c);
    if (!it.value().is_array()) throw ModelError("tern entries must be arrays of triples");
    auto& triples = m.tern[{agent, c}];
    for (const auto& e : it.value()) {
      if (!e.is_array() || e.size() != 3)
        throw ModelError("tern entries must be [s, u, v] id triples");
      triples.insert({m.base.require_world(e[0].get<std::string>()),
                      m.base.require_world(e[1].get<std::string>()),
                      m.base.require_world(e[2].get<std::string>())});
    }
  }
  std::sort(m.constants.begin(), m.constants.end());
  m.validate();
  return m;
}

AnyModel parse_lts(const json& j) {
  reject_unknown_keys(j, {"kind", "worlds", "actions", "trans", "val"});
  LtsModel m;
  m.states = string_list(field(j, "worlds"), "worlds");
  if (m.states.empty()) throw ModelError("model must be non-empty");
  m.actions = string_list(field(j, "actions"), "actions");
  const json& trans = field(j, "trans");
  if (!trans.is_object()) throw ModelError("trans must be an object");
  for (auto it = trans.begin(); it != trans.end(); ++it) {
    if (!m.has_action(it.key()))
      throw ModelError("transitions for undeclared action '" + it.key() + "'");
    if (!it.value().is_array()) throw ModelError("trans entries must be arrays of pairs");
    auto& pairs = m.trans[it.key()];
    for (const auto& e : it.value()) {
      if (!e.is_array() || e.size() != 2)
        throw ModelError("trans entries must be [from, to] id pairs");
      int a = m.state_index(e[0].get<std::string>());
      int b = m.state_index(e[1].get<std::string>());
      if (a < 0 || b < 0) throw ModelError("transition to undeclared state");
      pairs.insert({a, b});
    }
  }
  const json& val = field(j, "val");
  if (!val.is_object()) throw ModelError("val must be an object");
  for (auto it = val.begin(); it != val.end(); ++it) {
    std::set<int> ws;
    for (const auto& w : string_list(it.value(), "val")) ws.insert(m.require_state(w));
    m.val[it.key()] = ws;
  }
  m.validate();
  return m;
}

}  // namespace

AnyModel model_from_json(const json& j) {
  if (!j.is_object()) throw ModelError("model must be a JSON object");
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw ModelError("kind must be a string");
  std::string k = kind.get<std::string>();
  if (k == "kripke") return parse_kripke(j);
  if (k == "fo") return parse_fo(j);
  if (k == "ternary") return parse_ternary(j);
  if (k == "lts") return parse_lts(j);
  throw ModelError("unknown model kind '" + k + "'");
}

AnyModel parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("invalid JSON: ") + e.what());
  }
  return model_from_json(j);
}

namespace {

json kripke_json(const KripkeModel& m, const char* kind) {
  json j;
  j["kind"] = kind;
  j["worlds"] = m.worlds;
  j["agents"] = m.agents;
  json rel = json::object();
  for (const auto& [agent, pairs] : m.rel) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back({m.worlds[a], m.worlds[b]});
    rel[agent] = arr;
  }
  j["rel"] = rel;
  json val = json::object();
  for (const auto& [prop, ws] : m.val) {
    json arr = json::array();
    for (int w : ws) arr.push_back(m.worlds[w]);
    val[prop] = arr;
  }
  j["val"] = val;
  return j;
}

}  // namespace

json to_json(const KripkeModel& m) { return kripke_json(m, "kripke"); }

json to_json(const FOEpistemicModel& m) {
  json j = kripke_json(m.base, "fo");
  j["domain"] = m.domain;
  json vc = json::object();
  for (const auto& c : m.constants) {
    json per = json::object();
    const auto& values = m.vc.at(c);
    for (std::size_t w = 0; w < m.base.worlds.size(); w++)
      per[m.base.worlds[w]] = m.domain[static_cast<std::size_t>(values[w])];
    vc[c] = per;
  }
  j["vc"] = vc;
  return j;
}

json to_json(const TernaryModel& m) {
  json j = kripke_json(m.base, "ternary");
  json tern = json::object();
  for (const auto& [key, triples] : m.tern) {
    json arr = json::array();
    for (const auto& t : triples)
      arr.push_back({m.base.worlds[t[0]], m.base.worlds[t[1]], m.base.worlds[t[2]]});
    tern[key.first + "," + key.second] = arr;
  }
  j["tern"] = tern;
  return j;
}

json to_json(const LtsModel& m) {
  json j;
  j["kind"] = "lts";
  j["worlds"] = m.states;
  j["actions"] = m.actions;
  json trans = json::object();
  for (const auto& [action, pairs] : m.trans) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back({m.states[a], m.states[b]});
    trans[action] = arr;
  }
  j["trans"] = trans;
  json val = json::object();
  for (const auto& [prop, ws] : m.val) {
    json arr = json::array();
    for (int w : ws) arr.push_back(m.states[w]);
    val[prop] = arr;
  }
  j["val"] = val;
  return j;
}

json to_json(const AnyModel& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

}  // namespace knowwh
