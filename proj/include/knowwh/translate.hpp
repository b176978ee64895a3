#ifndef KNOWWH_TRANSLATE_HPP
#define KNOWWH_TRANSLATE_HPP

#include "knowwh/formula.hpp"

namespace knowwh {

// Kw{i}f  ==>  box{i}f' | box{i}~f'. Truth-preserving on every model.
Formula ncl_to_ml(const Formula& f);

// box{i}f ==> f' & Kw{i}f'. Truth-preserving on reflexive models only.
Formula ml_to_ncl_reflexive(const Formula& f);

// ~Kw{i}cond -> (box{i}body <-> (Kw{i}body & Kw{i}(cond -> body))).
Formula ad_instance(const Formula& cond, const Formula& body, const std::string& agent);

// dia{i,$c}(a, b) as the disjunction of its three unary-diamond expansions;
// equivalent on ternary models satisfying the three frame conditions.
Formula expand_binary_diamond(const Formula& a, const Formula& b, const std::string& agent,
                              const std::string& constant);

}  // namespace knowwh

#endif
