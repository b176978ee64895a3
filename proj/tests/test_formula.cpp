#include <doctest.h>

#include "gen.hpp"
#include "knowwh/formula.hpp"
#include "knowwh/parse.hpp"

using namespace knowwh;

TEST_CASE("printing matches the concrete grammar") {
  CHECK(to_string(Formula::conj(Formula::atom("p"), Formula::neg(Formula::atom("q")))) ==
        "(p & ~q)");
  CHECK(to_string(Formula::kw("i", Formula::impl(Formula::atom("p"), Formula::atom("q")))) ==
        "Kw{i}(p -> q)");
  CHECK(to_string(Formula::kh(Formula::atom("p"), Formula::atom("q"))) == "Kh(p, q)");
  CHECK(to_string(Formula::kw("i", Formula::atom("p"))) == "Kw{i} p");
  CHECK(to_string(Formula::kv("1", Formula::top(), "c")) == "Kv{1}(T, $c)");
  CHECK(to_string(Formula::inspect("c", Formula::atom("p"))) == "[$c] p");
}

TEST_CASE("fragment classification") {
  CHECK(fragment(parse("Kw{i} p")) == Fragment::NCL);
  CHECK(fragment(parse("[p] Kv{i}(q,$c)")) == Fragment::PALKVR);
  CHECK(fragment(Formula::kh(Formula::atom("p"), Formula::kw("i", Formula::atom("q")))) ==
        Fragment::Mixed);
  CHECK(fragment(parse("p & ~q")) == Fragment::EL);
  CHECK(fragment(parse("K{i} p")) == Fragment::EL);
  CHECK(fragment(parse("Kv{i}(p,$c)")) == Fragment::ELKVR);
  CHECK(fragment(parse("[$c] Kv{i}(p,$c)")) == Fragment::PILKV);
  CHECK(fragment(parse("dia{i,$c}(p, q)")) == Fragment::MLKV);
  CHECK(fragment(parse("box{i} p")) == Fragment::MLKV);
  CHECK(fragment(parse("Kh(p, q)")) == Fragment::LKH);
  CHECK(fragment(parse("box{i}p & Kw{i}p")) == Fragment::Mixed);
  CHECK(fragment(parse("[?p] Kw{i} q")) == Fragment::NCL);
}

TEST_CASE("fragment is monotone under subformulas") {
  auto check_monotone = [](const Formula& f) {
    Fragment whole = fragment(f);
    auto rec = [&](auto&& self, const Formula& g) -> void {
      CHECK(fragment_leq(fragment(g), whole));
      int n = g.arity();
      if (n >= 1) self(self, g.left());
      if (n >= 2) self(self, g.right());
    };
    rec(rec, f);
  };
  gen::Rng r(42);
  for (auto fam : {gen::Family::El, gen::Family::NclPal, gen::Family::Palkvr,
                   gen::Family::Pilkv, gen::Family::Mlkv, gen::Family::Lkh, gen::Family::BoxKw})
    for (int t = 0; t < 200; t++) check_monotone(gen::formula(r, fam, 4));
}

TEST_CASE("substitution") {
  CHECK(subst(parse("Kw{i} p"), "p", parse("q & r")) == parse("Kw{i}(q & r)"));
  CHECK(subst(parse("p -> p"), "p", Formula::bottom()) == parse("F -> F"));
  CHECK(subst(parse("Kv{i}(p,$c)"), "p", parse("~q")) == parse("Kv{i}(~q,$c)"));
  // untouched atoms stay
  CHECK(subst(parse("p & q"), "p", parse("r")) == parse("r & q"));
  // simultaneous substitution does not chain
  Formula swapped = subst_all(parse("p & q"), {{"p", parse("q")}, {"q", parse("p")}});
  CHECK(swapped == parse("q & p"));
}

TEST_CASE("desugared equality identifies boolean spellings") {
  CHECK(equal_desugared(parse("p -> q"), parse("~(p & ~q)")));
  CHECK(equal_desugared(parse("p | q"), parse("~(~p & ~q)")));
  CHECK(!equal_desugared(parse("p -> q"), parse("q -> p")));
  CHECK(parse("p -> q") != parse("~(p & ~q)"));  // plain equality is structural
}

TEST_CASE("modal depth") {
  CHECK(modal_depth(parse("p & q")) == 0);
  CHECK(modal_depth(parse("Kw{i} p")) == 1);
  CHECK(modal_depth(parse("Kw{i} Kw{i} p")) == 2);
  CHECK(modal_depth(parse("K{i}(p & Kw{i} q)")) == 2);
}

TEST_CASE("collectors") {
  Formula f = parse("[p] Kv{i}(q,$c) & K{j} r");
  CHECK(atoms(f) == std::set<std::string>{"p", "q", "r"});
  CHECK(agents(f) == std::set<std::string>{"i", "j"});
  CHECK(constants(f) == std::set<std::string>{"c"});
}
