#include "knowwh/suites.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include "knowwh/parse.hpp"

namespace knowwh {

namespace {

using Gen = SuiteItem::Gen;

std::vector<Suite> make_suites() {
  const FrameClass any = FrameClass::Arbitrary;
  const FrameClass equiv = FrameClass::Equivalence;
  std::vector<Suite> s;

  s.push_back(Suite{
      "s5",
      "knowing that over equivalence frames",
      {
          {"TAUT", "p | ~p", equiv, true, {"p"}, Gen::El},
          {"DISTK", "K{i}(p -> q) -> (K{i}p -> K{i}q)", equiv, true, {"p", "q"}, Gen::El},
          {"T", "K{i}p -> p", equiv, true, {"p"}, Gen::El},
          {"4", "K{i}p -> K{i}K{i}p", equiv, true, {"p"}, Gen::El},
          {"5", "~K{i}p -> K{i}~K{i}p", equiv, true, {"p"}, Gen::El},
      }});

  s.push_back(Suite{
      "sncl-arbitrary",
      "knowing whether over arbitrary frames",
      {
          {"TAUT", "p | ~p", any, true, {"p"}, Gen::Ncl},
          {"KwCon", "Kw{i}(q -> p) & Kw{i}(~q -> p) -> Kw{i}p", any, true, {"p", "q"}, Gen::Ncl},
          {"KwDis", "Kw{i}p -> Kw{i}(p -> q) | Kw{i}(~p -> q)", any, true, {"p", "q"}, Gen::Ncl},
          {"Kw<->", "Kw{i}p <-> Kw{i}~p", any, true, {"p"}, Gen::Ncl},
      }});

  s.push_back(Suite{
      "table1",
      "knowing whether per frame class",
      {
          {"KwT", "Kw{i}p & Kw{i}(p -> q) & p -> Kw{i}q", FrameClass::Reflexive, true,
           {"p", "q"}, Gen::Ncl},
          {"Kw4", "Kw{i}p -> Kw{i}(Kw{i}p | q)", FrameClass::Transitive, true, {"p", "q"},
           Gen::Ncl},
          {"Kw5", "~Kw{i}p -> Kw{i}(~Kw{i}p | q)", FrameClass::Euclidean, true, {"p", "q"},
           Gen::Ncl},
          {"wKw4", "Kw{i}p -> Kw{i}Kw{i}p", FrameClass::ReflexiveTransitive, true, {"p"},
           Gen::Ncl},
          {"wKw5", "~Kw{i}p -> Kw{i}~Kw{i}p", equiv, true, {"p"}, Gen::Ncl},
          {"KwB", "p -> Kw{i}((Kw{i}p & Kw{i}(p -> q) & ~Kw{i}q) -> r)", FrameClass::Symmetric,
           true, {"p", "q", "r"}, Gen::Ncl},
      }});

  s.push_back(Suite{
      "kw-reduction",
      "announcement reduction for knowing whether",
      {
          {"[]Kw", "[p]Kw{i}q <-> (p -> (Kw{i}[p]q | Kw{i}[p]~q))", any, true, {"p", "q"},
           Gen::Ncl},
      }});

  s.push_back(Suite{
      "selkv",
      "conditional knowing value over equivalence frames",
      {
          {"TAUT", "p | ~p", equiv, true, {"p"}, Gen::Elkvr},
          {"DISTK", "K{i}(p -> q) -> (K{i}p -> K{i}q)", equiv, true, {"p", "q"}, Gen::Elkvr},
          {"T", "K{i}p -> p", equiv, true, {"p"}, Gen::Elkvr},
          {"4", "K{i}p -> K{i}K{i}p", equiv, true, {"p"}, Gen::Elkvr},
          {"5", "~K{i}p -> K{i}~K{i}p", equiv, true, {"p"}, Gen::Elkvr},
          {"DISTKv^r", "K{i}(p -> q) -> (Kv{i}(q, $c) -> Kv{i}(p, $c))", equiv, true,
           {"p", "q"}, Gen::Elkvr},
          {"Kv^r4", "Kv{i}(p, $c) -> K{i}Kv{i}(p, $c)", equiv, true, {"p"}, Gen::Elkvr},
          {"Kv^rF", "Kv{i}(F, $c)", equiv, true, {}, Gen::Elkvr},
          {"Kv^rOr",
           "~K{i}~(p & q) & Kv{i}(p, $c) & Kv{i}(q, $c) -> Kv{i}(p | q, $c)", equiv, true,
           {"p", "q"}, Gen::Elkvr},
      }});

  s.push_back(Suite{
      "palkv-reduction",
      "announcement reduction for conditional knowing value",
      {
          {"!ATOM", "<q>p <-> (q & p)", equiv, true, {"q"}, Gen::Palkvr},
          {"!NEG", "<q>~p <-> (q & ~<q>p)", equiv, true, {"p", "q"}, Gen::Palkvr},
          {"!CON", "<q>(p & r) <-> (<q>p & <q>r)", equiv, true, {"p", "q", "r"}, Gen::Palkvr},
          {"!K", "<q>K{i}p <-> (q & K{i}(q -> <q>p))", equiv, true, {"p", "q"}, Gen::Palkvr},
          {"!Kv^r", "<p>Kv{i}(q, $c) <-> (p & Kv{i}(<p>q, $c))", equiv, true, {"p", "q"},
           Gen::Palkvr},
      }});

  s.push_back(Suite{
      "smlkv",
      "binary value diamond over the three frame conditions",
      {
          {"TAUT", "p | ~p", any, true, {"p"}, Gen::Mlkv},
          {"DISTK", "box{i}(p -> q) -> (box{i}p -> box{i}q)", any, true, {"p", "q"}, Gen::Mlkv},
          {"DISTKv^b",
           "box{i,$c}(p -> q, r) -> (box{i,$c}(p, r) -> box{i,$c}(q, r))", any, true,
           {"p", "q", "r"}, Gen::Mlkv},
          {"SYM", "box{i,$c}(p, q) -> box{i,$c}(q, p)", any, true, {"p", "q"}, Gen::Mlkv},
          {"INC", "dia{i,$c}(p, q) -> dia{i}p", any, true, {"p", "q"}, Gen::Mlkv},
          {"ATEUC", "dia{i,$c}(p, q) & dia{i}r -> dia{i,$c}(p, r) | dia{i,$c}(q, r)", any,
           true, {"p", "q", "r"}, Gen::Mlkv},
      }});

  s.push_back(Suite{
      "skh",
      "knowing how",
      {
          {"TAUT", "p | ~p", any, true, {"p"}, Gen::Lkh},
          {"DISTU", "U p & U(p -> q) -> U q", any, true, {"p", "q"}, Gen::Lkh},
          {"COMPKh", "Kh(p, r) & Kh(r, q) -> Kh(p, q)", any, true, {"p", "q", "r"}, Gen::Lkh},
          {"EMP", "U(p -> q) -> Kh(p, q)", any, true, {"p", "q"}, Gen::Lkh},
          {"TU", "U p -> p", any, true, {"p"}, Gen::Lkh},
          {"4KU", "Kh(p, q) -> U Kh(p, q)", any, true, {"p", "q"}, Gen::Lkh},
          {"5KU", "~Kh(p, q) -> U ~Kh(p, q)", any, true, {"p", "q"}, Gen::Lkh},
          {"WSKh", "U(p -> r) & U(o -> q) & Kh(r, o) -> Kh(p, q)", any, true,
           {"p", "q", "r", "o"}, Gen::Lkh},
          {"POSTKh", "Kh(r, Kh(p, q) & p) -> Kh(r, q)", any, true, {"p", "q", "r"}, Gen::Lkh},
      }});

  s.push_back(Suite{
      "nonvalid",
      "documented non-validities",
      {
          {"KwDist", "Kw{i}(p -> q) & Kw{i}p -> Kw{i}q", any, false, {}, Gen::Ncl},
          {"BoxAsKw", "box{i}p <-> (p & Kw{i}p)", any, false, {}, Gen::Ncl},
          {"KhAnd", "Kh(r, p) & Kh(r, q) -> Kh(r, p & q)", any, false, {}, Gen::Lkh},
      }});

  return s;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Formula random_instance(std::mt19937_64& rng, Gen gen, int depth) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };
  if (depth == 0 || pick(4) == 0) {
    switch (pick(5)) {
      case 0: return Formula::top();
      case 1: return Formula::bottom();
      case 2: return Formula::atom("p");
      case 3: return Formula::atom("q");
      default: return Formula::atom("r");
    }
  }
  auto sub = [&] { return random_instance(rng, gen, depth - 1); };
  int boolean = pick(6);
  if (boolean == 0) return Formula::neg(sub());
  if (boolean == 1) return Formula::conj(sub(), sub());
  if (boolean == 2) return Formula::disj(sub(), sub());
  if (boolean == 3) return Formula::impl(sub(), sub());
  switch (gen) {
    case Gen::El:
      return Formula::k("i", sub());
    case Gen::Ncl:
      return Formula::kw("i", sub());
    case Gen::Elkvr:
      return pick(2) ? Formula::k("i", sub()) : Formula::kv("i", sub(), "c");
    case Gen::Palkvr:
      switch (pick(3)) {
        case 0: return Formula::k("i", sub());
        case 1: return Formula::kv("i", sub(), "c");
        default: return Formula::announce(sub(), sub());
      }
    case Gen::Mlkv:
      switch (pick(3)) {
        case 0: return Formula::box("i", sub());
        case 1: return Formula::dia_c("i", "c", sub());
        default: return Formula::dia_c2("i", "c", sub(), sub());
      }
    case Gen::Lkh:
      return Formula::kh(sub(), sub());
  }
  return Formula::top();
}

}  // namespace

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = make_suites();
  return suites;
}

const Suite* find_suite(const std::string& id) {
  for (const auto& s : all_suites())
    if (s.id == id) return &s;
  return nullptr;
}

SuiteReport run_suite(const std::string& id, const SearchBudget& budget) {
  const Suite* suite = find_suite(id);
  if (!suite) throw std::runtime_error("unknown suite '" + id + "'");

  SuiteReport report;
  report.suite = id;
  report.budget = budget;
  for (const auto& item : suite->items) {
    ItemResult r;
    r.name = item.name;
    r.formula_text = item.formula_text;
    r.expect_valid = item.expect_valid;
    Formula f = parse(item.formula_text);
    Verdict v = valid(f, item.cls, budget);
    r.got_valid = v.valid;
    r.models_examined = v.models_examined;
    r.counter = v.counter;
    r.ok = v.valid == item.expect_valid;

    // Substitution spot-checks guard the evaluators against schema
    // instances the canonical atoms would miss. Kept small: 2 worlds.
    if (r.ok && item.expect_valid && !item.subst_atoms.empty()) {
      std::mt19937_64 rng(fnv1a(id + "/" + item.name));
      SearchBudget small = budget;
      small.max_worlds = std::min(small.max_worlds, 2);
      for (int t = 0; t < 20; t++) {
        std::vector<std::pair<std::string, Formula>> map;
        for (const auto& a : item.subst_atoms)
          map.push_back({a, random_instance(rng, item.gen, 2)});
        Formula inst = subst_all(f, map);
        Verdict sv = valid(inst, item.cls, small);
        r.substitution_checks++;
        if (!sv.valid) {
          r.ok = false;
          r.counter = sv.counter;
          break;
        }
      }
    }
    report.all_ok = report.all_ok && r.ok;
    report.items.push_back(std::move(r));
  }
  return report;
}

std::string report_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (worlds<=" << r.budget.max_worlds
     << " values<=" << r.budget.max_values << " actions<=" << r.budget.max_actions << ")\n";
  std::size_t width = 4;
  for (const auto& item : r.items) width = std::max(width, item.name.size());
  for (const auto& item : r.items) {
    os << (item.ok ? "ok   " : "FAIL ") << std::left << std::setw(static_cast<int>(width) + 2)
       << item.name << (item.got_valid ? "valid-up-to-budget" : "invalid")
       << "  models=" << item.models_examined;
    if (item.substitution_checks > 0) os << "  subst=" << item.substitution_checks;
    os << "\n";
    if (!item.ok && item.counter)
      os << "     countermodel at " << item.counter->world << ": "
         << item.counter->model.dump() << "\n";
    if (item.expect_valid == false && item.got_valid == false && item.counter)
      os << "     countermodel at " << item.counter->world << ": "
         << item.counter->model.dump() << "\n";
  }
  int ok = 0;
  for (const auto& item : r.items) ok += item.ok ? 1 : 0;
  os << r.suite << ": " << ok << "/" << r.items.size() << " items as expected\n";
  return os.str();
}

nlohmann::json report_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["budget"] = {{"max_worlds", r.budget.max_worlds},
                 {"max_agents", r.budget.max_agents},
                 {"max_values", r.budget.max_values},
                 {"max_actions", r.budget.max_actions},
                 {"max_letters", r.budget.max_letters}};
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : r.items) {
    nlohmann::json ij;
    ij["item"] = item.name;
    ij["formula"] = item.formula_text;
    ij["expected"] = item.expect_valid ? "valid" : "invalid";
    ij["status"] = item.got_valid ? "valid-up-to-budget" : "invalid";
    ij["ok"] = item.ok;
    ij["models_examined"] = item.models_examined;
    ij["substitution_checks"] = item.substitution_checks;
    if (item.counter) {
      ij["countermodel"] = item.counter->model;
      ij["world"] = item.counter->world;
    }
    items.push_back(ij);
  }
  j["items"] = items;
  j["all_ok"] = r.all_ok;
  return j;
}

}  // namespace knowwh
