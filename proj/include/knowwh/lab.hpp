#ifndef KNOWWH_LAB_HPP
#define KNOWWH_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "knowwh/formula.hpp"
#include "knowwh/model.hpp"

namespace knowwh {

// Bounds for exhaustive model enumeration. Letters and agents are always
// taken from the formula itself; max_letters/max_agents bound the random
// instances generated by the axiom suites and are reported with results.
struct SearchBudget {
  int max_worlds = 3;
  int max_agents = 2;
  int max_values = 2;
  int max_actions = 2;
  int max_letters = 2;
  std::uint64_t cap = 2000000000;  // enumeration instances tolerated

  bool operator==(const SearchBudget&) const = default;
};

class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Countermodel {
  nlohmann::json model;  // replayable via parse_model
  std::string world;
};

struct Verdict {
  bool valid = false;
  std::optional<Countermodel> counter;
  std::uint64_t models_examined = 0;
};

struct SatVerdict {
  bool satisfiable = false;
  std::optional<Countermodel> witness;
  std::uint64_t models_examined = 0;
};

// Validity of f over all models of the class within the budget, by
// exhaustive enumeration. The model kind follows the formula's operators
// (values present -> FO; ternary diamonds -> ternary; Kh -> LTS; otherwise
// Kripke). Enumeration order, deterministic and stable:
//   worlds ascending; per agent, relation bitmasks ascending (bit from*n+to)
//   filtered by the frame class, skipping structures that are not minimal
//   under world renaming; for FO, value assignments as an odometer
//   (constant-major, world-minor); valuations as one counter with bit
//   (atom*n + world); ternary relations as per-source odometers over the
//   frame-condition-respecting candidates; LTS transition masks per action,
//   skipping structures not minimal under state and action renaming.
// The first falsifying (model, world) in this order is the countermodel.
Verdict valid(const Formula& f, FrameClass cls, const SearchBudget& budget);

// Frame validity: truth at all worlds under all valuations of f's atoms over
// the given frame. The countermodel carries the falsifying valuation.
Verdict frame_valid(const KripkeModel& frame, const Formula& f);

// First satisfying pointed model within budget, arbitrary frames, same
// enumeration order as valid().
SatVerdict sat_search(const Formula& f, const SearchBudget& budget);

}  // namespace knowwh

#endif
