#include "knowwh/translate.hpp"

#include <optional>
#include <stdexcept>

#include "knowwh/eval.hpp"

namespace knowwh {

namespace {

template <typename Clause>
Formula homomorphic(const Formula& f, Clause&& clause) {
  if (auto r = clause(f)) return *r;
  switch (f.op()) {
    case Op::Top:
    case Op::Bottom:
    case Op::Atom:
      return f;
    case Op::Not: return Formula::neg(homomorphic(f.left(), clause));
    case Op::And:
      return Formula::conj(homomorphic(f.left(), clause), homomorphic(f.right(), clause));
    case Op::Or:
      return Formula::disj(homomorphic(f.left(), clause), homomorphic(f.right(), clause));
    case Op::Implies:
      return Formula::impl(homomorphic(f.left(), clause), homomorphic(f.right(), clause));
    case Op::Iff:
      return Formula::iff(homomorphic(f.left(), clause), homomorphic(f.right(), clause));
    case Op::Announce:
      return Formula::announce(homomorphic(f.left(), clause), homomorphic(f.right(), clause));
    case Op::AnnounceWhether:
      return Formula::announce_whether(homomorphic(f.left(), clause),
                                       homomorphic(f.right(), clause));
    default:
      throw FragmentMismatch("operator outside the translation's fragment: " + to_string(f));
  }
}

}  // namespace

Formula ncl_to_ml(const Formula& f) {
  if (!operators_within(f, {Op::Kw, Op::Announce, Op::AnnounceWhether}))
    throw FragmentMismatch("ncl_to_ml expects an NCL formula");
  return homomorphic(f, [](const Formula& g) -> std::optional<Formula> {
    if (g.op() != Op::Kw) return std::nullopt;
    Formula body = ncl_to_ml(g.left());
    return Formula::disj(Formula::box(g.agent(), body),
                         Formula::box(g.agent(), Formula::neg(body)));
  });
}

Formula ml_to_ncl_reflexive(const Formula& f) {
  if (!operators_within(f, {Op::Box}))
    throw FragmentMismatch("ml_to_ncl_reflexive expects a box-only modal formula");
  return homomorphic(f, [](const Formula& g) -> std::optional<Formula> {
    if (g.op() != Op::Box) return std::nullopt;
    Formula body = ml_to_ncl_reflexive(g.left());
    return Formula::conj(body, Formula::kw(g.agent(), body));
  });
}

Formula ad_instance(const Formula& cond, const Formula& body, const std::string& agent) {
  Formula lhs = Formula::neg(Formula::kw(agent, cond));
  Formula rhs = Formula::iff(
      Formula::box(agent, body),
      Formula::conj(Formula::kw(agent, body),
                    Formula::kw(agent, Formula::impl(cond, body))));
  return Formula::impl(lhs, rhs);
}

Formula expand_binary_diamond(const Formula& a, const Formula& b, const std::string& agent,
                              const std::string& constant) {
  auto diac = [&](const Formula& x) { return Formula::dia_c(agent, constant, x); };
  auto dia = [&](const Formula& x) { return Formula::dia(agent, x); };
  Formula one = Formula::conj(diac(a), dia(b));
  Formula two = Formula::conj(diac(b), dia(a));
  Formula three = Formula::conj(
      Formula::conj(Formula::conj(Formula::conj(dia(a), dia(b)), Formula::neg(diac(a))),
                    Formula::neg(diac(b))),
      diac(Formula::disj(a, b)));
  return Formula::disj(Formula::disj(one, two), three);
}

}  // namespace knowwh
