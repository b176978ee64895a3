#ifndef KNOWWH_MODEL_JSON_HPP
#define KNOWWH_MODEL_JSON_HPP

#include <string>

#include <json.hpp>

#include "knowwh/model.hpp"

namespace knowwh {

// JSON model format. One object with a "kind" discriminator:
//   kripke : worlds, agents, rel, val
//   fo     : worlds, agents, rel, val, domain, vc
//   ternary: worlds, agents, rel, val, tern
//   lts    : worlds, actions, trans, val
// World ids are strings and keep their listed order; rel/trans map names to
// arrays of id pairs; val maps atoms to arrays of ids; vc maps constants to
// {world: value} objects (total); tern maps "agent,constant" to id triples.
// Unknown keys are rejected.
AnyModel parse_model(const std::string& text);
AnyModel model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KripkeModel& m);
nlohmann::json to_json(const FOEpistemicModel& m);
nlohmann::json to_json(const TernaryModel& m);
nlohmann::json to_json(const LtsModel& m);
nlohmann::json to_json(const AnyModel& m);

}  // namespace knowwh

#endif
