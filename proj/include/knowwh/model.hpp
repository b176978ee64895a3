#ifndef KNOWWH_MODEL_HPP
#define KNOWWH_MODEL_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace knowwh {

class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class FrameClass {
  Arbitrary,
  Serial,
  Reflexive,
  Transitive,
  Symmetric,
  Euclidean,
  Equivalence,
  ReflexiveTransitive,
};

const char* to_string(FrameClass c);
std::optional<FrameClass> frame_class_from_string(const std::string& name);

// Worlds are kept in listed order; relations and valuations use indices into
// `worlds`. A frame is a model with an empty valuation.
struct KripkeModel {
  std::vector<std::string> worlds;
  std::vector<std::string> agents;
  std::map<std::string, std::set<std::pair<int, int>>> rel;
  std::map<std::string, std::set<int>> val;

  bool operator==(const KripkeModel&) const = default;

  int world_index(const std::string& id) const;  // -1 if absent
  int require_world(const std::string& id) const;
  bool has_agent(const std::string& id) const;
  const std::set<std::pair<int, int>>& relation(const std::string& agent) const;
  bool sees(const std::string& agent, int from, int to) const;
  std::set<int> successors(const std::string& agent, int from) const;
  bool val_at(const std::string& prop, int world) const;  // absent atoms are false

  void validate() const;
};

struct FOEpistemicModel {
  KripkeModel base;
  std::vector<std::string> domain;
  std::vector<std::string> constants;
  // value index into `domain` per (constant, world); total.
  std::map<std::string, std::vector<int>> vc;

  bool operator==(const FOEpistemicModel&) const = default;

  bool has_constant(const std::string& c) const;
  int value_of(const std::string& c, int world) const;

  void validate() const;
};

struct TernaryModel {
  KripkeModel base;
  std::vector<std::string> constants;
  // (agent, constant) -> set of (s, u, v) triples.
  std::map<std::pair<std::string, std::string>, std::set<std::array<int, 3>>> tern;

  bool operator==(const TernaryModel&) const = default;

  bool has_constant(const std::string& c) const;
  const std::set<std::array<int, 3>>& triples(const std::string& agent,
                                              const std::string& c) const;

  void validate() const;
};

struct LtsModel {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  std::map<std::string, std::set<std::pair<int, int>>> trans;
  std::map<std::string, std::set<int>> val;

  bool operator==(const LtsModel&) const = default;

  int state_index(const std::string& id) const;
  int require_state(const std::string& id) const;
  bool has_action(const std::string& a) const;
  std::set<int> successors(const std::string& action, int from) const;
  bool val_at(const std::string& prop, int state) const;

  void validate() const;
};

using AnyModel = std::variant<KripkeModel, FOEpistemicModel, TernaryModel, LtsModel>;

bool check_frame(const KripkeModel& m, FrameClass cls);

struct DisjointUnion {
  KripkeModel model;
  std::map<std::string, std::string> left;   // world id in m1 -> world id in union
  std::map<std::string, std::string> right;  // world id in m2 -> world id in union
};

// Tagged sum of the two world sets. Left model keeps its world ids; right
// ids are primed until fresh. Agents are merged by name.
DisjointUnion disjoint_union(const KripkeModel& m1, const KripkeModel& m2);

// Restriction to a subset of worlds, keeping listed order.
KripkeModel restrict_model(const KripkeModel& m, const std::set<int>& keep);
FOEpistemicModel restrict_model(const FOEpistemicModel& m, const std::set<int>& keep);

// Public inspection of constant c at world s: keeps exactly the worlds that
// agree with s on the value of c. Never empties the model.
FOEpistemicModel inspect(const FOEpistemicModel& m, const std::string& c,
                         const std::string& s);

// R_i^c = { (s,u,v) | s ->_i u, s ->_i v, vc(c,u) != vc(c,v) }.
TernaryModel derive_ternary(const FOEpistemicModel& m);

struct TernaryViolation {
  int condition;  // 1 symmetry, 2 inclusion, 3 anti-euclidean
  std::string agent;
  std::string constant;
  std::array<int, 3> triple;
  int extra_world = -1;  // the third successor, condition 3 only
  std::string describe(const TernaryModel& m) const;
};

struct TernaryReport {
  std::vector<TernaryViolation> violations;
  bool ok() const { return violations.empty(); }
};

TernaryReport check_ternary_conditions(const TernaryModel& m);

// Fixture models used by tests and shipped as JSON under data/.
namespace fixtures {
KripkeModel model_a();   // s ->i t, p everywhere
KripkeModel model_b();   // the single world s', p holds
FOEpistemicModel model_kv();
LtsModel model_kh1();
LtsModel model_kh2();
LtsModel model_kh3();
KripkeModel frame_f1();  // chain s1 -> t -> u
KripkeModel frame_f2();  // single reflexive point
}  // namespace fixtures

}  // namespace knowwh

#endif
