#include <doctest.h>

#include "gen.hpp"
#include "knowwh/parse.hpp"
#include "knowwh/suites.hpp"

using namespace knowwh;

TEST_CASE("grammar cases") {
  CHECK(parse("Kw{i}(p -> q)") ==
        Formula::kw("i", Formula::impl(Formula::atom("p"), Formula::atom("q"))));
  CHECK(parse("Kv{i}($c)") == Formula::kv("i", Formula::top(), "c"));
  CHECK(parse("U p") == Formula::kh(Formula::neg(Formula::atom("p")), Formula::bottom()));
  CHECK(parse("Kd{i}($c,$d)") == Formula::kd("i", "c", "d"));
  CHECK(parse("dia{i} p") == Formula::neg(Formula::box("i", Formula::neg(Formula::atom("p")))));
  CHECK(parse("dia{i,$c} p") == Formula::dia_c("i", "c", Formula::atom("p")));
  CHECK(parse("dia{i,$c}(p, q)") ==
        Formula::dia_c2("i", "c", Formula::atom("p"), Formula::atom("q")));
  CHECK(parse("box{i,$c}(p, q)") ==
        Formula::box_c2("i", "c", Formula::atom("p"), Formula::atom("q")));
  CHECK(parse("box{i,$c} p") == Formula::box_c2("i", "c", Formula::atom("p"), Formula::atom("p")));
  CHECK(parse("[p]q") == Formula::announce(Formula::atom("p"), Formula::atom("q")));
  CHECK(parse("[?p]q") == Formula::announce_whether(Formula::atom("p"), Formula::atom("q")));
  CHECK(parse("[$c]q") == Formula::inspect("c", Formula::atom("q")));
  CHECK(parse("<p>q") ==
        Formula::neg(Formula::announce(Formula::atom("p"), Formula::neg(Formula::atom("q")))));
  CHECK(parse("K{1} p") == Formula::k("1", Formula::atom("p")));
}

TEST_CASE("precedence and associativity") {
  // <-> binds loosest, then ->, |, &, prefixes
  CHECK(parse("p -> q | r & ~s <-> t") ==
        Formula::iff(parse("p -> (q | (r & ~s))"), parse("t")));
  CHECK(parse("p -> q -> r") == parse("p -> (q -> r)"));
  CHECK(parse("p & q & r") == parse("(p & q) & r"));
  CHECK(parse("Kw{i} p & q") == Formula::conj(parse("Kw{i} p"), parse("q")));
  CHECK(parse("~K{i}~p") == Formula::neg(Formula::k("i", Formula::neg(Formula::atom("p")))));
  CHECK(parse("[p] Kw{i} q & r") == Formula::conj(parse("[p] Kw{i} q"), parse("r")));
}

TEST_CASE("parse errors carry position and expectations") {
  try {
    parse("Kw{i}(p -> ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(!e.expected().empty());
    CHECK(e.span().begin >= 10);
  }
  try {
    parse("p &&");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse("Kv{i}(p q)"), ParseError);
  CHECK_THROWS_AS(parse("dia{i,c} p"), ParseError);  // constants need the sigil
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("round trip: parse after print is the identity") {
  gen::Rng r(7);
  for (auto fam :
       {gen::Family::El, gen::Family::Ncl, gen::Family::NclPal, gen::Family::Elkvr,
        gen::Family::Palkvr, gen::Family::Pilkv, gen::Family::Mlkv, gen::Family::Lkh}) {
    for (int t = 0; t < 150; t++) {
      Formula f = gen::formula(r, fam, 6, {"p", "q3", "r"}, {"i", "ag2"}, {"c", "d1"});
      CHECK(parse(to_string(f)) == f);
    }
  }
}

TEST_CASE("every suite axiom parses") {
  for (const auto& suite : all_suites())
    for (const auto& item : suite.items)
      CHECK_NOTHROW(parse(item.formula_text));
}

TEST_CASE("garbage input raises parse errors, never anything else") {
  const std::string pool = "pqr KwKvKhUTF{}()[]<>$?~&|-> ,i c12";
  gen::Rng r(151);
  for (int t = 0; t < 2000; t++) {
    std::string text;
    int len = r.upto(40);
    for (int k = 0; k < len; k++) text += pool[r.upto(static_cast<int>(pool.size()))];
    try {
      Formula f = parse(text);
      CHECK(parse(to_string(f)) == f);  // accidental successes still round-trip
    } catch (const ParseError&) {
    }
  }
}
