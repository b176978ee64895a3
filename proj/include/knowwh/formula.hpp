#ifndef KNOWWH_FORMULA_HPP
#define KNOWWH_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace knowwh {

enum class Op {
  Top,
  Bottom,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Iff,
  K,                // K{i} f        -- knowing that
  Kw,               // Kw{i} f       -- knowing whether
  Kv,               // Kv{i}(f, $c)  -- knowing the value of c given f
  Announce,         // [f] g         -- public announcement
  AnnounceWhether,  // [?f] g        -- announcing whether
  Inspect,          // [$c] g        -- public inspection of c
  Box,              // box{i} f
  DiaC,             // dia{i,$c} f
  DiaC2,            // dia{i,$c}(f, g)
  Kh,               // Kh(f, g)      -- knowing how to achieve g given f
};

// Smallest language a formula lives in, judged by the operators it uses.
// Mixed marks operator combinations that no single language admits.
enum class Fragment { EL, NCL, ELKVR, PALKVR, PILKV, MLKV, LKH, Mixed };

const char* to_string(Fragment f);

// Immutable formula; cheap to copy (shared nodes).
class Formula {
public:
  Formula() : Formula(top()) {}

  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula k(std::string agent, Formula f);
  static Formula kw(std::string agent, Formula f);
  static Formula kv(std::string agent, Formula cond, std::string constant);
  static Formula announce(Formula announced, Formula f);
  static Formula announce_whether(Formula announced, Formula f);
  static Formula inspect(std::string constant, Formula f);
  static Formula box(std::string agent, Formula f);
  static Formula dia_c(std::string agent, std::string constant, Formula f);
  static Formula dia_c2(std::string agent, std::string constant, Formula a, Formula b);
  static Formula kh(Formula pre, Formula goal);

  // Abbreviations. These build their expansions; there is no dedicated node.
  static Formula dia(std::string agent, Formula f);     // ~box{i}~f
  static Formula box_c2(std::string agent, std::string constant, Formula a,
                        Formula b);                     // ~dia{i,$c}(~a, ~b)
  static Formula uni(Formula f);                        // Kh(~f, F)
  static Formula kv_plain(std::string agent, std::string constant);  // Kv{i}(T, $c)
  static Formula kd(std::string agent, std::string c, std::string d);  // K{i}[$c]Kv{i}($d)
  static Formula ann_dia(Formula announced, Formula f);  // ~[a]~f

  Op op() const;
  // Atom name (Op::Atom only).
  const std::string& name() const;
  // Agent id (K, Kw, Kv, Box, DiaC, DiaC2).
  const std::string& agent() const;
  // Constant id (Kv, Inspect, DiaC, DiaC2).
  const std::string& constant() const;
  const Formula& left() const;
  const Formula& right() const;
  int arity() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Stable identity of the shared node, usable as a memo key while the
  // formula is alive.
  const void* id() const;

private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::string label;
  std::string cname;
  Formula lhs;
  Formula rhs;
};

inline Op Formula::op() const { return node_->op; }
inline const std::string& Formula::name() const { return node_->label; }
inline const std::string& Formula::agent() const { return node_->label; }
inline const std::string& Formula::constant() const { return node_->cname; }
inline const Formula& Formula::left() const { return node_->lhs; }
inline const Formula& Formula::right() const { return node_->rhs; }
inline const void* Formula::id() const { return node_.get(); }

// Canonical concrete syntax; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

Fragment fragment(const Formula& f);
// Partial order on fragments: a <= b iff every formula of fragment a is one
// of fragment b (EL is the bottom, Mixed the top).
bool fragment_leq(Fragment a, Fragment b);

// Uniform substitution of a single atom.
Formula subst(const Formula& f, const std::string& atom, const Formula& with);
// Simultaneous substitution (avoids capture between replacements).
Formula subst_all(const Formula& f,
                  const std::vector<std::pair<std::string, Formula>>& map);

// Rewrites Or/Implies/Iff into {Not, And}; other operators left alone.
Formula desugar(const Formula& f);
bool equal_desugared(const Formula& a, const Formula& b);

std::set<std::string> atoms(const Formula& f);
std::set<std::string> agents(const Formula& f);
std::set<std::string> constants(const Formula& f);
int modal_depth(const Formula& f);

// True iff every non-boolean operator in f is listed in `allowed`. Booleans
// always pass. Used to gate evaluators by model kind.
bool operators_within(const Formula& f, std::initializer_list<Op> allowed);

}  // namespace knowwh

#endif
