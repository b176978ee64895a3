#include <doctest.h>

#include "gen.hpp"
#include "knowwh/eval.hpp"
#include "knowwh/kh.hpp"
#include "knowwh/parse.hpp"

using namespace knowwh;

TEST_CASE("knowing that on the fixtures") {
  auto a = fixtures::model_a();
  CHECK(eval_el(a, "s", parse("K{i} p")));
  CHECK(eval_el(a, "s", parse("K{i} K{i} p")));
  CHECK(eval_el(fixtures::model_b(), "s'", parse("K{i} F")));
  CHECK(!eval_el(a, "s", parse("K{i} F")));
  CHECK_THROWS_AS(eval_el(a, "s", parse("Kw{i} p")), FragmentMismatch);
  CHECK_THROWS_AS(eval_el(a, "nowhere", parse("p")), ModelError);
  CHECK_THROWS_AS(eval_el(a, "s", parse("K{zz} p")), EvalError);
}

TEST_CASE("knowing whether on the fixtures") {
  auto a = fixtures::model_a();
  auto b = fixtures::model_b();
  CHECK(eval_ncl(a, "s", parse("Kw{i} q")));   // single successor
  CHECK(eval_ncl(b, "s'", parse("Kw{i} q")));  // no successor
  CHECK(eval_ncl(a, "t", parse("Kw{i} p")));
  // unknown atoms are false everywhere
  CHECK(!eval_ncl(a, "s", parse("[p] zz")));
}

TEST_CASE("Kw negation symmetry") {
  gen::Rng r(19);
  for (int t = 0; t < 300; t++) {
    auto m = gen::kripke(r, 4, {"i", "j"});
    Formula f = gen::formula(r, gen::Family::NclPal, 4, {"p", "q"}, {"i", "j"});
    for (const auto& w : m.worlds)
      CHECK(eval_ncl(m, w, Formula::kw("i", f)) == eval_ncl(m, w, Formula::kw("i", Formula::neg(f))));
  }
}

TEST_CASE("announcing whether equals the conjunction of both announcements") {
  gen::Rng r(23);
  for (int t = 0; t < 500; t++) {
    auto m = gen::kripke(r, 4);
    Formula f = gen::formula(r, gen::Family::NclPal, 3);
    Formula g = gen::formula(r, gen::Family::NclPal, 3);
    Formula lhs = Formula::announce_whether(f, g);
    Formula rhs = Formula::conj(Formula::announce(f, g),
                                Formula::announce(Formula::neg(f), g));
    for (const auto& w : m.worlds) CHECK(eval_ncl(m, w, lhs) == eval_ncl(m, w, rhs));
  }
}

TEST_CASE("conditional knowing value on the fixtures") {
  auto kv = fixtures::model_kv();
  CHECK(!eval_kv(kv, "w1", parse("Kv{1}(p,$c)")));
  CHECK(eval_kv(kv, "w1", parse("Kv{1}(F,$c)")));
  CHECK(eval_kv(kv, "w1", parse("[$c] Kv{1}(p,$c)")));
  CHECK(eval_kv(kv, "w1", parse("K{1} p")));
  CHECK_THROWS_AS(eval_kv(kv, "w1", parse("Kv{1}(p,$zz)")), EvalError);
}

TEST_CASE("ternary diamonds on the derived fixture") {
  auto t = derive_ternary(fixtures::model_kv());
  CHECK(eval_mlkv(t, "w1", parse("dia{1,$c} p")));
  CHECK(!eval_mlkv(t, "w1", parse("dia{1,$c}(p, ~p)")));
  CHECK(eval_mlkv(t, "w1", parse("box{1} p")));
  CHECK_THROWS_AS(eval_mlkv(t, "w1", parse("dia{1,$zz} p")), EvalError);
}

namespace {

// K becomes box and Kv(f, c) becomes ~dia{i,$c}f'; truth is preserved on the
// derived ternary model, clause by clause.
Formula to_ternary_language(const Formula& f) {
  switch (f.op()) {
    case Op::K: return Formula::box(f.agent(), to_ternary_language(f.left()));
    case Op::Kv:
      return Formula::neg(
          Formula::dia_c(f.agent(), f.constant(), to_ternary_language(f.left())));
    case Op::Not: return Formula::neg(to_ternary_language(f.left()));
    case Op::And: return Formula::conj(to_ternary_language(f.left()), to_ternary_language(f.right()));
    case Op::Or: return Formula::disj(to_ternary_language(f.left()), to_ternary_language(f.right()));
    case Op::Implies:
      return Formula::impl(to_ternary_language(f.left()), to_ternary_language(f.right()));
    case Op::Iff: return Formula::iff(to_ternary_language(f.left()), to_ternary_language(f.right()));
    default: return f;
  }
}

}  // namespace

TEST_CASE("derived diamond agrees with negated Kv") {
  gen::Rng r(31);
  for (int t = 0; t < 500; t++) {
    auto m = gen::fo(r, 4, 2);
    auto tern = derive_ternary(m);
    Formula f = gen::formula(r, gen::Family::Bool, 2, {"p", "q"});
    Formula lhs = Formula::dia_c("i", "c", f);
    Formula rhs = Formula::neg(Formula::kv("i", f, "c"));
    Formula deep = gen::formula(r, gen::Family::Elkvr, 3, {"p", "q"});
    for (const auto& w : m.base.worlds) {
      CHECK(eval_mlkv(tern, w, lhs) == eval_kv(m, w, rhs));
      CHECK(eval_mlkv(tern, w, to_ternary_language(deep)) == eval_kv(m, w, deep));
    }
  }
}

TEST_CASE("dispatch per model kind") {
  AnyModel kh3 = fixtures::model_kh3();
  CHECK(eval(kh3, "s1", parse("Kh(p, q)")));
  AnyModel a = fixtures::model_a();
  CHECK_THROWS_AS(eval(a, "s", parse("Kh(p, q)")), FragmentMismatch);
  AnyModel kv = fixtures::model_kv();
  CHECK(eval(kv, "w1", parse("Kd{1}($c,$c)")));
  // mixed box/Kw formulas evaluate on one Kripke model
  CHECK(eval(a, "s", parse("~Kw{i}q -> (box{i}p <-> (Kw{i}p & Kw{i}(q -> p)))")));
}

TEST_CASE("the primitive Kd clause matches its defining abbreviation") {
  // The dependence fragment reads the relations as equivalences.
  gen::Rng r(37);
  for (int t = 0; t < 500; t++) {
    auto m = gen::fo(r, 4, 2, {"i"}, {"p"}, {"c", "d"}, /*equivalence=*/true);
    Formula sugar = Formula::kd("i", "c", "d");
    for (const auto& w : m.base.worlds)
      CHECK(kd_primitive(m, w, "i", "c", "d") == eval_kv(m, w, sugar));
  }
}

TEST_CASE("inspection order does not matter for two constants") {
  gen::Rng r(41);
  Formula both = parse("K{i}[$c][$d](Kv{i}($c) & Kv{i}($d))");
  Formula flipped = parse("K{i}[$d][$c](Kv{i}($c) & Kv{i}($d))");
  for (int t = 0; t < 300; t++) {
    auto m = gen::fo(r, 4, 2, {"i"}, {"p"}, {"c", "d"});
    for (const auto& w : m.base.worlds)
      CHECK(eval_kv(m, w, both) == eval_kv(m, w, flipped));
  }
}

TEST_CASE("knowing the dependence helps to know the value") {
  gen::Rng r(43);
  Formula law = parse("Kd{i}($c,$d) & Kv{i}(p,$c) -> Kv{i}(p,$d)");
  for (int t = 0; t < 500; t++) {
    auto m = gen::fo(r, 4, 3, {"i"}, {"p"}, {"c", "d"}, /*equivalence=*/true);
    for (const auto& w : m.base.worlds) CHECK(eval_kv(m, w, law));
  }
}

TEST_CASE("announce as a model operation") {
  auto a = fixtures::model_a();
  CHECK(announce(a, parse("p")) == a);
  CHECK(announce(a, parse("T")) == a);
  CHECK(announce(a, parse("Kw{i} p")) == a);
  CHECK_THROWS_AS(announce(a, parse("F")), EmptyResult);

  auto kv = fixtures::model_kv();
  CHECK(announce(kv, parse("p")) == kv);
  FOEpistemicModel one = announce_whether(kv, parse("Kv{1}($c)"), "w1");
  // Kv{1}($c) is false at both worlds, so its negation is announced
  CHECK(one == kv);
}

TEST_CASE("iterated announcements compose") {
  gen::Rng r(47);
  for (int t = 0; t < 200; t++) {
    auto m = gen::kripke(r, 4);
    Formula f = gen::formula(r, gen::Family::Ncl, 2);
    Formula g = gen::formula(r, gen::Family::Ncl, 2);
    Formula body = gen::formula(r, gen::Family::Ncl, 2);
    Formula nested = Formula::announce(f, Formula::announce(g, body));
    for (const auto& w : m.worlds) {
      bool direct = eval_ncl(m, w, nested);
      bool stepped = true;
      if (eval_ncl(m, w, f)) {
        KripkeModel after_f = announce(m, f);
        if (eval_ncl(after_f, w, g)) {
          KripkeModel after_g = announce(after_f, g);
          stepped = eval_ncl(after_g, w, body);
        }
      }
      CHECK(direct == stepped);
    }
  }
}
