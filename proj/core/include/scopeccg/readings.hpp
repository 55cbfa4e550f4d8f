#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scopeccg/chart.hpp"
#include "scopeccg/term.hpp"

namespace scopeccg {

class NormalizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoParse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Turns every set-form s-d(N) into a quantifier q-d(V, N(V), .) and returns
// the canonical form. Regions are the root and each quantifier restriction,
// quantifier body, lambda body and up(...) body.
//  - A clausal argument up(C) is normalized first; the quantifiers heading C
//    then move out to wrap the predicate taking it.
//  - Structurally equal set-forms in one region (including copies nested in
//    other set-forms' restrictions) become one quantifier, placed at their
//    lowest common predicate.
//  - At one node: a set-form nested in another's restriction goes outside
//    its host; otherwise earlier stamps go outside, unstamped after stamped,
//    then leftmost outermost.
Term normalize(const Term& t);

struct Reading {
  Term term;
  std::uint64_t multiplicity = 0;
};

// Normalized readings of every full-span `s` item, merged by canonical form,
// sorted by printed form. Throws NoParse if there is no such item.
std::vector<Reading> readings(const Chart& chart);
std::vector<Reading> readings(const Lexicon& lex, std::string_view sentence,
                              const ParseOptions& opts = {});

// Sum of derivation counts over full-span `s` items.
std::uint64_t sentence_derivations(const Chart& chart);

// Determiner occurrences as `det:noun` in preorder, one per quantifier node
// (duplicates kept). The noun is the last unary predicate of the bound
// variable in the restriction.
std::vector<std::string> determiner_labels(const Term& reading);
std::vector<std::string> distinct_labels(const Term& reading);

// True iff some quantifier labelled d2 lies inside the restriction or body
// of some quantifier labelled d1. Throws std::invalid_argument when either
// label is absent.
bool outscopes(const Term& reading, std::string_view d1, std::string_view d2);

// Every ordered pair (d1, d2) of distinct labels with outscopes(d1, d2).
std::vector<std::pair<std::string, std::string>> outscope_pairs(const Term& reading);

}  // namespace scopeccg
