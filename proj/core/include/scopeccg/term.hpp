#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scopeccg {

// First-order logical-form terms. Values are immutable and cheap to copy
// (a shared pointer to a const node).
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Atom, Compound, Lam, Up };

  // Variables are identified by id; the name is only a display hint.
  static Term var(std::uint32_t id, std::string name);
  static Term atom(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);
  static Term lam(Term param, Term body);
  static Term up(Term body);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_compound() const { return kind() == Kind::Compound; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_up() const { return kind() == Kind::Up; }

  std::uint32_t var_id() const { return node_->id; }
  // Var name, atom name, or compound functor.
  const std::string& name() const { return node_->name; }
  // Compound arguments; [param, body] for Lam; [body] for Up.
  const std::vector<Term>& args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args[i]; }

  const Term& lam_param() const { return node_->args[0]; }
  const Term& lam_body() const { return node_->args[1]; }
  const Term& up_body() const { return node_->args[0]; }

  // Entry stamp carried by set-denoting determiner terms once they reach
  // the semantic core of a chart item; 0 means unstamped. Not part of
  // structural identity for unification.
  int stamp() const { return node_->stamp; }
  Term with_stamp(int stamp) const;

  bool same_node(const Term& o) const { return node_ == o.node_; }

  // Structural identity, ignoring stamps.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::uint32_t id = 0;
    std::string name;
    std::vector<Term> args;
    int stamp = 0;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// `q-every(X, R, B)`: quantifier with bound variable X.
bool is_quantifier(const Term& t);
// `s-every(N)`: set-denoting narrow-scope determiner term.
bool is_set_form(const Term& t);
// "every" for both q-every and s-every.
std::string determiner_of(const Term& t);

// Source of fresh variable ids. Not thread-safe; use one per parse.
class VarSupply {
 public:
  explicit VarSupply(std::uint32_t first = 1) : next_(first) {}
  Term fresh(std::string_view hint);
  std::uint32_t peek() const { return next_; }

 private:
  std::uint32_t next_;
};

class Subst {
 public:
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const Term* find(std::uint32_t var) const;
  bool contains(std::uint32_t var) const { return map_.count(var) != 0; }
  const std::map<std::uint32_t, Term>& bindings() const { return map_; }

  // Adds var -> value, keeping the substitution idempotent. `value` must
  // already be fully resolved under *this and must not contain `var`.
  void bind(std::uint32_t var, const Term& value);

 private:
  std::map<std::uint32_t, Term> map_;
};

std::optional<Subst> unify(const Term& a, const Term& b, Subst s = {});
Term apply(const Subst& s, const Term& t);

bool occurs(std::uint32_t var, const Term& t);

// Free variables in first-occurrence order. Lam binds its parameter in the
// body; q-<det>(V, R, B) binds V in R and B.
std::vector<Term> free_vars(const Term& t);

// All variable occurrences (bound or free), first-occurrence order.
std::vector<Term> all_vars(const Term& t);

// Alpha-canonical form: binders get fresh names at their binding site,
// free variables at first occurrence, numbered V1, V2, ... left to right.
Term canonicalize(const Term& t);

// Renames every variable (ignoring binding structure) to V1, V2, ... in
// first-occurrence order. Used for variant checks over whole categories.
class VariantRenamer {
 public:
  Term rename(const Term& t);

 private:
  std::map<std::uint32_t, Term> names_;
};

// Replaces variables by id with fresh ones from `supply`, consistently
// across calls on the same renamer.
class Freshener {
 public:
  explicit Freshener(VarSupply& supply) : supply_(supply) {}
  Term rename(const Term& t);

 private:
  VarSupply& supply_;
  std::map<std::uint32_t, Term> map_;
};

// Textual syntax: functor(arg, ...), X^body, up(body); variables start
// uppercase, atoms and functors lowercase. Stamps print as `@k` after a
// set-form when `show_stamps` is set.
std::string to_string(const Term& t, bool show_stamps = false);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Variables are allocated from `supply`; identical names within one scope
// map to the same variable.
class TermReader {
 public:
  TermReader(std::string_view text, VarSupply& supply,
             std::map<std::string, Term>* scope = nullptr);

  Term read_term();
  bool at_end();
  std::size_t pos() const { return pos_; }
  void skip_ws();
  char peek();
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::string read_ident();
  Term lookup_var(const std::string& name);

  std::string_view text_;
  std::size_t pos_ = 0;
  VarSupply& supply_;
  std::map<std::string, Term> own_scope_;
  std::map<std::string, Term>* scope_;
};

Term parse_term(std::string_view text, VarSupply& supply);
Term parse_term(std::string_view text);

}  // namespace scopeccg
