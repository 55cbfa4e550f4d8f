#include "scopeccg/term.hpp"

#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace scopeccg {

Term Term::var(std::uint32_t id, std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, id, std::move(name), {}, 0}));
}

Term Term::atom(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Atom, 0, std::move(name), {}, 0}));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) return atom(std::move(functor));
  return Term(std::make_shared<const Node>(
      Node{Kind::Compound, 0, std::move(functor), std::move(args), 0}));
}

Term Term::lam(Term param, Term body) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Lam, 0, "^", {std::move(param), std::move(body)}, 0}));
}

Term Term::up(Term body) {
  return Term(std::make_shared<const Node>(Node{Kind::Up, 0, "up", {std::move(body)}, 0}));
}

Term Term::with_stamp(int stamp) const {
  Node n = *node_;
  n.stamp = stamp;
  return Term(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.var_id() == b.var_id();
    case Term::Kind::Atom:
      return a.name() == b.name();
    default:
      if (a.name() != b.name() || a.arity() != b.arity()) return false;
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.arg(i) != b.arg(i)) return false;
      return true;
  }
}

bool is_quantifier(const Term& t) {
  return t.is_compound() && t.arity() == 3 && t.name().rfind("q-", 0) == 0 &&
         t.arg(0).is_var();
}

bool is_set_form(const Term& t) {
  return t.is_compound() && t.arity() == 1 && t.name().rfind("s-", 0) == 0;
}

std::string determiner_of(const Term& t) {
  if (t.name().size() > 2 && (t.name()[0] == 'q' || t.name()[0] == 's') &&
      t.name()[1] == '-')
    return t.name().substr(2);
  return t.name();
}

Term VarSupply::fresh(std::string_view hint) {
  std::uint32_t id = next_++;
  return Term::var(id, std::string(hint));
}

// ---------------------------------------------------------------------------
// Substitution and unification

const Term* Subst::find(std::uint32_t var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

void Subst::bind(std::uint32_t var, const Term& value) {
  Subst single;
  single.map_.emplace(var, value);
  for (auto& [k, v] : map_) v = apply(single, v);
  map_.emplace(var, value);
}

Term apply(const Subst& s, const Term& t) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Var: {
      const Term* b = s.find(t.var_id());
      return b ? *b : t;
    }
    case Term::Kind::Atom:
      return t;
    default: {
      bool changed = false;
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const auto& a : t.args()) {
        args.push_back(apply(s, a));
        changed |= !args.back().same_node(a);
      }
      if (!changed) return t;
      Term out = t.kind() == Term::Kind::Lam  ? Term::lam(args[0], args[1])
                 : t.kind() == Term::Kind::Up ? Term::up(args[0])
                                              : Term::compound(t.name(), std::move(args));
      return t.stamp() ? out.with_stamp(t.stamp()) : out;
    }
  }
}

bool occurs(std::uint32_t var, const Term& t) {
  if (t.is_var()) return t.var_id() == var;
  for (const auto& a : t.args())
    if (occurs(var, a)) return true;
  return false;
}

namespace {

bool unify_into(const Term& a0, const Term& b0, Subst& s) {
  Term a = apply(s, a0);
  Term b = apply(s, b0);
  if (a.is_var() && b.is_var()) {
    if (a.var_id() == b.var_id()) return true;
    // The variable with the smaller id is the one that gets bound.
    if (a.var_id() < b.var_id()) s.bind(a.var_id(), b);
    else s.bind(b.var_id(), a);
    return true;
  }
  if (a.is_var()) {
    if (occurs(a.var_id(), b)) return false;
    s.bind(a.var_id(), b);
    return true;
  }
  if (b.is_var()) {
    if (occurs(b.var_id(), a)) return false;
    s.bind(b.var_id(), a);
    return true;
  }
  if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity())
    return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!unify_into(a.arg(i), b.arg(i), s)) return false;
  return true;
}

}  // namespace

std::optional<Subst> unify(const Term& a, const Term& b, Subst s) {
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// Variables and binding structure

namespace {

// Walks `t` calling `on_var(var, bound)` for each variable occurrence;
// binding sites are reported with bound = true before their scope.
void walk_scoped(const Term& t, std::vector<std::uint32_t>& bound,
                 const std::function<void(const Term&, bool, bool)>& on_var) {
  auto is_bound = [&](std::uint32_t id) {
    for (auto b : bound)
      if (b == id) return true;
    return false;
  };
  switch (t.kind()) {
    case Term::Kind::Var:
      on_var(t, is_bound(t.var_id()), false);
      return;
    case Term::Kind::Atom:
      return;
    case Term::Kind::Lam:
      if (t.lam_param().is_var()) {
        on_var(t.lam_param(), false, true);
        bound.push_back(t.lam_param().var_id());
        walk_scoped(t.lam_body(), bound, on_var);
        bound.pop_back();
        return;
      }
      break;
    case Term::Kind::Compound:
      if (is_quantifier(t)) {
        on_var(t.arg(0), false, true);
        bound.push_back(t.arg(0).var_id());
        walk_scoped(t.arg(1), bound, on_var);
        walk_scoped(t.arg(2), bound, on_var);
        bound.pop_back();
        return;
      }
      break;
    default:
      break;
  }
  for (const auto& a : t.args()) walk_scoped(a, bound, on_var);
}

}  // namespace

std::vector<Term> free_vars(const Term& t) {
  std::vector<Term> out;
  std::set<std::uint32_t> seen;
  std::vector<std::uint32_t> bound;
  walk_scoped(t, bound, [&](const Term& v, bool is_bound, bool binder) {
    if (is_bound || binder) return;
    if (seen.insert(v.var_id()).second) out.push_back(v);
  });
  return out;
}

std::vector<Term> all_vars(const Term& t) {
  std::vector<Term> out;
  std::set<std::uint32_t> seen;
  std::function<void(const Term&)> go = [&](const Term& x) {
    if (x.is_var()) {
      if (seen.insert(x.var_id()).second) out.push_back(x);
      return;
    }
    for (const auto& a : x.args()) go(a);
  };
  go(t);
  return out;
}

namespace {

Term rebuild(const Term& t, std::vector<Term> args) {
  Term out = t.kind() == Term::Kind::Lam  ? Term::lam(args[0], args[1])
             : t.kind() == Term::Kind::Up ? Term::up(args[0])
                                          : Term::compound(t.name(), std::move(args));
  return t.stamp() ? out.with_stamp(t.stamp()) : out;
}

struct Canonicalizer {
  std::uint32_t counter = 0;
  std::map<std::uint32_t, Term> free;
  std::vector<std::pair<std::uint32_t, Term>> scopes;

  Term next() {
    ++counter;
    return Term::var(counter, "V" + std::to_string(counter));
  }

  Term lookup(const Term& v) {
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it)
      if (it->first == v.var_id()) return it->second;
    auto f = free.find(v.var_id());
    if (f != free.end()) return f->second;
    Term n = next();
    free.emplace(v.var_id(), n);
    return n;
  }

  Term go(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var:
        return lookup(t);
      case Term::Kind::Atom:
        return t;
      case Term::Kind::Lam:
        if (t.lam_param().is_var()) {
          Term p = next();
          scopes.emplace_back(t.lam_param().var_id(), p);
          Term body = go(t.lam_body());
          scopes.pop_back();
          return Term::lam(p, body);
        }
        break;
      case Term::Kind::Compound:
        if (is_quantifier(t)) {
          Term p = next();
          scopes.emplace_back(t.arg(0).var_id(), p);
          Term r = go(t.arg(1));
          Term b = go(t.arg(2));
          scopes.pop_back();
          return rebuild(t, {p, r, b});
        }
        break;
      default:
        break;
    }
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(go(a));
    return rebuild(t, std::move(args));
  }
};

}  // namespace

Term canonicalize(const Term& t) {
  Canonicalizer c;
  return c.go(t);
}

Term VariantRenamer::rename(const Term& t) {
  if (t.is_var()) {
    auto it = names_.find(t.var_id());
    if (it != names_.end()) return it->second;
    auto n = static_cast<std::uint32_t>(names_.size() + 1);
    Term v = Term::var(n, "V" + std::to_string(n));
    names_.emplace(t.var_id(), v);
    return v;
  }
  if (t.is_atom()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(rename(a));
  return rebuild(t, std::move(args));
}

Term Freshener::rename(const Term& t) {
  if (t.is_var()) {
    auto it = map_.find(t.var_id());
    if (it != map_.end()) return it->second;
    std::string base = t.name().substr(0, t.name().find('_'));
    Term v = supply_.fresh(base);
    v = Term::var(v.var_id(), base + "_" + std::to_string(v.var_id()));
    map_.emplace(t.var_id(), v);
    return v;
  }
  if (t.is_atom()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(rename(a));
  return rebuild(t, std::move(args));
}

// ---------------------------------------------------------------------------
// Printing and reading

namespace {

void print(std::ostream& os, const Term& t, bool stamps) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Atom:
      os << t.name();
      return;
    case Term::Kind::Lam:
      print(os, t.lam_param(), stamps);
      os << '^';
      print(os, t.lam_body(), stamps);
      return;
    case Term::Kind::Up:
      os << "up(";
      print(os, t.up_body(), stamps);
      os << ')';
      return;
    case Term::Kind::Compound:
      os << t.name() << '(';
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) os << ',';
        print(os, t.arg(i), stamps);
      }
      os << ')';
      if (stamps && t.stamp()) os << '@' << t.stamp();
      return;
  }
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

}  // namespace

std::string to_string(const Term& t, bool show_stamps) {
  std::ostringstream os;
  print(os, t, show_stamps);
  return os.str();
}

TermReader::TermReader(std::string_view text, VarSupply& supply,
                       std::map<std::string, Term>* scope)
    : text_(text), supply_(supply), scope_(scope ? scope : &own_scope_) {}

void TermReader::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

char TermReader::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool TermReader::at_end() { return peek() == '\0'; }

void TermReader::fail(const std::string& msg) const { throw ParseError(msg, pos_); }

std::string TermReader::read_ident() {
  skip_ws();
  std::size_t start = pos_;
  while (pos_ < text_.size() && ident_char(text_[pos_])) {
    // A '-' must be followed by an identifier character to belong to it.
    if (text_[pos_] == '-' && (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) break;
    ++pos_;
  }
  if (start == pos_) fail("expected identifier");
  // Skeleton leaves are written q?(...).
  if (pos_ < text_.size() && text_[pos_] == '?') ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

Term TermReader::lookup_var(const std::string& name) {
  auto it = scope_->find(name);
  if (it != scope_->end()) return it->second;
  Term v = Term::var(supply_.fresh(name).var_id(), name);
  scope_->emplace(name, v);
  return v;
}

Term TermReader::read_term() {
  char c = peek();
  if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("expected term");
  std::string id = read_ident();
  if (std::isupper(static_cast<unsigned char>(id[0])) || id[0] == '_') {
    Term v = lookup_var(id);
    if (peek() == '^') {
      ++pos_;
      Term body = read_term();
      return Term::lam(v, body);
    }
    return v;
  }
  if (peek() != '(') return Term::atom(id);
  ++pos_;
  std::vector<Term> args;
  if (peek() == ')') fail("empty argument list");
  for (;;) {
    args.push_back(read_term());
    char d = peek();
    if (d == ',') {
      ++pos_;
      continue;
    }
    if (d == ')') {
      ++pos_;
      break;
    }
    fail("expected ',' or ')'");
  }
  if (id == "up") {
    if (args.size() != 1) fail("up/1 takes exactly one argument");
    return Term::up(args[0]);
  }
  Term out = Term::compound(id, std::move(args));
  if (peek() == '@') {
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected stamp number");
    out = out.with_stamp(std::stoi(std::string(text_.substr(start, pos_ - start))));
  }
  return out;
}

Term parse_term(std::string_view text, VarSupply& supply) {
  TermReader r(text, supply);
  Term t = r.read_term();
  if (!r.at_end()) r.fail("trailing input");
  return t;
}

Term parse_term(std::string_view text) {
  VarSupply supply;
  return parse_term(text, supply);
}

}  // namespace scopeccg
