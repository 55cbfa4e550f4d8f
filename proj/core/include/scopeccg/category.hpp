#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "scopeccg/term.hpp"

namespace scopeccg {

enum class Sort : std::uint8_t { S, NP, N, SBAR };
enum class Dir : std::uint8_t { Forward, Backward };

std::string_view sort_name(Sort s);

// A CCG category whose atomic leaves carry semantic terms (`s:S`, `np:X`).
class Category {
 public:
  static Category atomic(Sort sort, Term sem);
  static Category slash(Dir dir, Category result, Category arg);

  bool is_atomic() const { return node_->slash == false; }
  bool is_slash() const { return node_->slash; }
  bool is_forward() const { return is_slash() && node_->dir == Dir::Forward; }
  bool is_backward() const { return is_slash() && node_->dir == Dir::Backward; }

  Sort sort() const { return node_->sort; }
  const Term& sem() const { return *node_->sem; }
  Dir dir() const { return node_->dir; }
  const Category& result() const { return *node_->result; }
  const Category& arg() const { return *node_->arg; }

  // Leftmost atomic reached by following results: the semantic core.
  const Category& core() const;
  // Number of slashes along the result spine.
  int arity() const;

  // Rebuilds the category with every semantic term mapped through `f`.
  Category map_sems(const std::function<Term(const Term&)>& f) const;
  Category with_core_sem(const Term& sem) const;

  // Same slash structure and sorts, ignoring semantics.
  bool same_shape(const Category& o) const;

  friend bool operator==(const Category& a, const Category& b);

 private:
  struct Node {
    bool slash = false;
    Sort sort = Sort::S;
    std::optional<Term> sem;
    Dir dir = Dir::Forward;
    std::shared_ptr<const Category> result;
    std::shared_ptr<const Category> arg;
  };
  explicit Category(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Succeeds iff both categories have the same shape and every paired
// semantic term unifies.
std::optional<Subst> unify_cat(const Category& a, const Category& b, Subst s = {});
Category apply(const Subst& s, const Category& c);

// `(s:saw(X,Y)\np:X)/np:Y`; complex subcategories are parenthesized.
std::string to_string(const Category& c, bool show_stamps = false);
// Shape only: `(s\np)/np`.
std::string shape_string(const Category& c);

// Slashes associate left; `:term` binds to the atom on its left. Atoms
// without a term get fresh variables. Variable names are shared across the
// whole category (and across calls sharing `scope`).
Category parse_cat(std::string_view text, VarSupply& supply,
                   std::map<std::string, Term>* scope = nullptr);
Category parse_cat(std::string_view text);

// Renames all variables across the category to V1, V2, ... in first
// occurrence order; two categories are variants iff their keys match.
std::string variant_key(const Category& c, bool show_stamps = true);
Category variant_rename(const Category& c);

Category freshen(const Category& c, VarSupply& supply);

}  // namespace scopeccg
