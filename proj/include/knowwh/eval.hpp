#ifndef KNOWWH_EVAL_HPP
#define KNOWWH_EVAL_HPP

#include <string>

#include "knowwh/formula.hpp"
#include "knowwh/model.hpp"

namespace knowwh {

class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Formula operators do not fit the model kind (e.g. Kh on a Kripke model).
class FragmentMismatch : public EvalError {
public:
  using EvalError::EvalError;
};

// announce() would produce an empty model. Evaluators never trigger this:
// [f]g short-circuits to true where f fails.
class EmptyResult : public EvalError {
public:
  using EvalError::EvalError;
};

// Model restriction to the worlds satisfying `announced`.
KripkeModel announce(const KripkeModel& m, const Formula& announced);
FOEpistemicModel announce(const FOEpistemicModel& m, const Formula& announced);
// Announces `f` or `~f`, whichever is true at `at`.
KripkeModel announce_whether(const KripkeModel& m, const Formula& f, const std::string& at);
FOEpistemicModel announce_whether(const FOEpistemicModel& m, const Formula& f,
                                  const std::string& at);

// Truth at a pointed model. eval() dispatches on the model kind and accepts
// any formula whose operators that kind can interpret; the fragment-named
// entry points below enforce the narrower contracts.
bool eval(const AnyModel& m, const std::string& world, const Formula& f);

bool eval_el(const KripkeModel& m, const std::string& world, const Formula& f);
bool eval_ncl(const KripkeModel& m, const std::string& world, const Formula& f);
// Kripke clauses for the union of EL, NCL and plain box/dia (needed for
// formulas mixing box with Kw, which read fine on one Kripke model).
bool eval_kripke(const KripkeModel& m, const std::string& world, const Formula& f);
bool eval_kv(const FOEpistemicModel& m, const std::string& world, const Formula& f);
bool eval_mlkv(const TernaryModel& m, const std::string& world, const Formula& f);

// The Kd clause evaluated directly: every two i-accessible worlds agreeing
// on c's value agree on d's value. Must match K{i}[$c]Kv{i}($d).
bool kd_primitive(const FOEpistemicModel& m, const std::string& world,
                  const std::string& agent, const std::string& c, const std::string& d);

}  // namespace knowwh

#endif
