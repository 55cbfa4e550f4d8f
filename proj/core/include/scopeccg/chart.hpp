#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scopeccg/category.hpp"
#include "scopeccg/lexicon.hpp"

namespace scopeccg {

enum class Rule : std::uint8_t { Lex, FwdApply, BwdApply, FwdCompose, BwdCompose };

// `>`, `<`, `>B`, `<B`, or `lex`.
std::string_view rule_label(Rule r);

// X/Y  Y  =>  X
std::optional<Category> fwd_apply(const Category& f, const Category& a);
// Y  X\Y  =>  X
std::optional<Category> bwd_apply(const Category& a, const Category& f);
// X/Y  Y/Z  =>  X/Z
std::optional<Category> fwd_compose(const Category& f, const Category& g);
// Y\Z  X\Y  =>  X\Z
std::optional<Category> bwd_compose(const Category& g, const Category& f);

struct ParseOptions {
  std::size_t max_tokens = 32;
  // Reject items in which a pending set-form argument depends on a
  // quantifier that has already taken scope in the core (the NP would be
  // split around material that is not yet present).
  bool block_split_np = true;
  // Reject items in which a quantifier outside an up(...) clause binds a
  // variable inside it while another quantifier also scopes over the clause.
  bool clause_island = true;
  // Successive comma pairs bracket their contents: no derived item may
  // overlap a bracketed span without containing it or lying inside it.
  bool comma_brackets = true;
};

// Applies `rule` and the post-conditions every chart item satisfies:
// binder positions hold variables, set-forms newly in an `s` core are
// stamped, and the filters in `opts` hold.
std::optional<Category> combine(Rule rule, const Category& left, const Category& right,
                                const ParseOptions& opts = {});

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Backpointer {
  Rule rule = Rule::Lex;
  int left = -1;
  int right = -1;
  const LexEntry* entry = nullptr;
};

struct ChartItem {
  int id = -1;
  std::size_t begin = 0;
  std::size_t end = 0;
  Category category;
  std::string key;
  std::vector<Backpointer> backpointers;
};

class Chart {
 public:
  // Words only; commas are removed and kept as `brackets`.
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& brackets() const { return brackets_; }
  const std::vector<ChartItem>& items() const { return items_; }
  const ChartItem& item(int id) const { return items_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& cell(std::size_t begin, std::size_t end) const;

  std::vector<int> full_span() const;
  // Full-span items whose category is atomic `s`.
  std::vector<int> full_span_sentences() const;

  std::uint64_t derivation_count(int id) const;

 private:
  friend Chart parse(const Lexicon&, const std::vector<std::string>&, const ParseOptions&);
  std::vector<std::string> tokens_;
  std::vector<std::pair<std::size_t, std::size_t>> brackets_;
  std::vector<ChartItem> items_;
  std::vector<std::vector<int>> cells_;
  mutable std::vector<std::uint64_t> counts_;
  std::size_t index(std::size_t b, std::size_t e) const { return b * (tokens_.size() + 1) + e; }
};

// CKY closure of the four binary rules over lexical items, with one item
// per cell for each variant-distinct category.
Chart parse(const Lexicon& lex, const std::vector<std::string>& tokens,
            const ParseOptions& opts = {});

struct Derivation {
  Rule rule = Rule::Lex;
  std::size_t begin = 0;
  std::size_t end = 0;
  Category category;
  std::string tag;
  std::vector<Derivation> children;

  std::vector<Rule> steps() const;  // post-order, excluding leaves
};

std::vector<Derivation> derivations(const Chart& chart, int item,
                                    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Recomputes the category bottom-up from the leaves through the rules.
std::optional<Category> replay(const Derivation& d, const ParseOptions& opts = {});

// One line per constituent in post-order:
//   `<rule>\t<words>\t<category>` with variables renamed per line.
std::string format_derivation(const Derivation& d, const std::vector<std::string>& tokens);
std::vector<std::string> derivation_lines(const Derivation& d,
                                          const std::vector<std::string>& tokens);

}  // namespace scopeccg
