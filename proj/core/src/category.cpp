#include "scopeccg/category.hpp"

#include <cctype>
#include <sstream>

namespace scopeccg {

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::S: return "s";
    case Sort::NP: return "np";
    case Sort::N: return "n";
    case Sort::SBAR: return "sbar";
  }
  return "?";
}

Category Category::atomic(Sort sort, Term sem) {
  Node n;
  n.sort = sort;
  n.sem = std::move(sem);
  return Category(std::make_shared<const Node>(std::move(n)));
}

Category Category::slash(Dir dir, Category result, Category arg) {
  Node n;
  n.slash = true;
  n.dir = dir;
  n.result = std::make_shared<const Category>(std::move(result));
  n.arg = std::make_shared<const Category>(std::move(arg));
  return Category(std::make_shared<const Node>(std::move(n)));
}

const Category& Category::core() const {
  const Category* c = this;
  while (c->is_slash()) c = &c->result();
  return *c;
}

int Category::arity() const {
  int n = 0;
  for (const Category* c = this; c->is_slash(); c = &c->result()) ++n;
  return n;
}

Category Category::map_sems(const std::function<Term(const Term&)>& f) const {
  if (is_atomic()) return atomic(sort(), f(sem()));
  return slash(dir(), result().map_sems(f), arg().map_sems(f));
}

Category Category::with_core_sem(const Term& sem) const {
  if (is_atomic()) return atomic(sort(), sem);
  return slash(dir(), result().with_core_sem(sem), arg());
}

bool Category::same_shape(const Category& o) const {
  if (is_atomic() != o.is_atomic()) return false;
  if (is_atomic()) return sort() == o.sort();
  return dir() == o.dir() && result().same_shape(o.result()) && arg().same_shape(o.arg());
}

bool operator==(const Category& a, const Category& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_atomic() != b.is_atomic()) return false;
  if (a.is_atomic()) return a.sort() == b.sort() && a.sem() == b.sem();
  return a.dir() == b.dir() && a.result() == b.result() && a.arg() == b.arg();
}

namespace {

bool unify_cat_into(const Category& a, const Category& b, Subst& s) {
  if (a.is_atomic() != b.is_atomic()) return false;
  if (a.is_atomic()) {
    if (a.sort() != b.sort()) return false;
    auto r = unify(a.sem(), b.sem(), std::move(s));
    if (!r) return false;
    s = std::move(*r);
    return true;
  }
  if (a.dir() != b.dir()) return false;
  return unify_cat_into(a.result(), b.result(), s) && unify_cat_into(a.arg(), b.arg(), s);
}

}  // namespace

std::optional<Subst> unify_cat(const Category& a, const Category& b, Subst s) {
  if (!a.same_shape(b)) return std::nullopt;
  if (!unify_cat_into(a, b, s)) return std::nullopt;
  return s;
}

Category apply(const Subst& s, const Category& c) {
  if (s.empty()) return c;
  return c.map_sems([&](const Term& t) { return apply(s, t); });
}

namespace {

void print_cat(std::ostream& os, const Category& c, bool stamps, bool sems, bool top) {
  if (c.is_atomic()) {
    os << sort_name(c.sort());
    if (sems) os << ':' << to_string(c.sem(), stamps);
    return;
  }
  if (!top) os << '(';
  print_cat(os, c.result(), stamps, sems, false);
  os << (c.is_forward() ? '/' : '\\');
  print_cat(os, c.arg(), stamps, sems, false);
  if (!top) os << ')';
}

class CategoryParser {
 public:
  CategoryParser(std::string_view text, VarSupply& supply, std::map<std::string, Term>* scope)
      : text_(text), supply_(supply), scope_(scope ? scope : &own_scope_) {}

  Category parse() {
    Category c = read();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input in category");
    return c;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool match(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  Category read() {
    Category c = read_primary();
    for (;;) {
      char d = peek();
      if (d != '/' && d != '\\') break;
      ++pos_;
      Category arg = read_primary();
      c = Category::slash(d == '/' ? Dir::Forward : Dir::Backward, c, arg);
    }
    return c;
  }

  Category read_primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Category inner = read();
      if (peek() != ')') fail("expected ')' in category");
      ++pos_;
      return inner;
    }
    Sort sort;
    if (match("sbar")) sort = Sort::SBAR;
    else if (match("np")) sort = Sort::NP;
    else if (match("n")) sort = Sort::N;
    else if (match("s")) sort = Sort::S;
    else fail("expected atomic category");
    if (peek() == ':') {
      ++pos_;
      TermReader r(text_.substr(pos_), supply_, scope_);
      try {
        Term t = r.read_term();
        pos_ += r.pos();
        return Category::atomic(sort, t);
      } catch (const ParseError& e) {
        throw ParseError("bad semantic term", pos_ + e.position());
      }
    }
    const char* hint = sort == Sort::S ? "S" : sort == Sort::NP ? "X" : sort == Sort::N ? "N" : "P";
    Term v = supply_.fresh(hint);
    return Category::atomic(
        sort, Term::var(v.var_id(), std::string(hint) + "_" + std::to_string(v.var_id())));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  VarSupply& supply_;
  std::map<std::string, Term> own_scope_;
  std::map<std::string, Term>* scope_;
};

}  // namespace

std::string to_string(const Category& c, bool show_stamps) {
  std::ostringstream os;
  print_cat(os, c, show_stamps, true, true);
  return os.str();
}

std::string shape_string(const Category& c) {
  std::ostringstream os;
  print_cat(os, c, false, false, true);
  return os.str();
}

Category parse_cat(std::string_view text, VarSupply& supply, std::map<std::string, Term>* scope) {
  CategoryParser p(text, supply, scope);
  return p.parse();
}

Category parse_cat(std::string_view text) {
  VarSupply supply;
  return parse_cat(text, supply);
}

Category variant_rename(const Category& c) {
  VariantRenamer r;
  return c.map_sems([&](const Term& t) { return r.rename(t); });
}

std::string variant_key(const Category& c, bool show_stamps) {
  return to_string(variant_rename(c), show_stamps);
}

Category freshen(const Category& c, VarSupply& supply) {
  Freshener f(supply);
  return c.map_sems([&](const Term& t) { return f.rename(t); });
}

}  // namespace scopeccg
