#ifndef KNOWWH_BISIM_HPP
#define KNOWWH_BISIM_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "knowwh/model.hpp"

namespace knowwh {

enum class BisimKind { Standard, Delta };

struct BisimResult {
  bool related = false;
  // The greatest (delta-)bisimulation that witnesses the answer, as pairs of
  // world ids. For the delta kind these are worlds of the disjoint union.
  std::vector<std::pair<std::string, std::string>> witness;
};

// Standard: greatest bisimulation between m1 and m2, queried at (s1, s2).
// Delta: greatest delta-bisimulation on disjoint_union(m1, m2), queried at
// the injected points.
BisimResult check_bisim(const KripkeModel& m1, const std::string& s1, const KripkeModel& m2,
                        const std::string& s2, BisimKind kind);

// Greatest (delta-)bisimulation on a single model, as a relation on world
// indices. Computed by deleting violating pairs from the valuation-agreement
// relation until a fixpoint; the result is re-verified against the defining
// conditions and an exception is raised if it fails them.
std::set<std::pair<int, int>> max_bisim(const KripkeModel& m, BisimKind kind);

// Do the two points satisfy the same knowing-whether formulas of modal depth
// <= depth over the given letters? Decided semantically by refining the
// partition of the disjoint union's worlds depth-many times.
bool ncl_equiv_bounded(const KripkeModel& m1, const std::string& s1, const KripkeModel& m2,
                       const std::string& s2, int depth,
                       const std::set<std::string>& letters);

}  // namespace knowwh

#endif
