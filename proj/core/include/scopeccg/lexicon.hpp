#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scopeccg/category.hpp"

namespace scopeccg {

struct LexEntry {
  std::vector<std::string> lexeme;
  Category category;
  // Label shown in derivations: the surface form for plain entries, or
  // e.g. `q-every>s\np` for schema instances.
  std::string tag;
};

// Type-raising schema for one determiner: (T/(T\np))/n and (T\(T/np))/n
// for each T, with a wide (quantifier) and a narrow (set-form) variant.
struct RaiseScheme {
  std::vector<std::string> lexeme;
  std::string quantifier;  // q-every
  std::string set_form;    // s-every
};

class UnknownToken : public std::runtime_error {
 public:
  UnknownToken(const std::string& token, std::size_t position)
      : std::runtime_error("unknown token '" + token + "' at position " +
                           std::to_string(position)),
        token_(token),
        position_(position) {}
  const std::string& token() const { return token_; }
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised entries for one determiner over the shapes in `tset`. Wide variants
// exist only for shapes whose core is `s`; duplicates are dropped.
std::vector<LexEntry> instantiate_raised(const RaiseScheme& scheme,
                                         const std::vector<Category>& tset,
                                         VarSupply& supply);

struct LexMatch {
  const LexEntry* entry;
  std::size_t consumed;
  Category category;  // standardized apart
};

class Lexicon {
 public:
  void add(LexEntry entry);

  // All entries whose lexeme is a prefix of tokens[position..], each with a
  // freshly renamed category. Throws UnknownToken when nothing matches.
  std::vector<LexMatch> lookup(const std::vector<std::string>& tokens, std::size_t position,
                               VarSupply& supply) const;
  // Same, but an empty result instead of an exception.
  std::vector<LexMatch> match(const std::vector<std::string>& tokens, std::size_t position,
                              VarSupply& supply) const;

  const std::vector<LexEntry>& entries() const { return entries_; }
  const std::vector<Category>& tset() const { return tset_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // Line-oriented format: `lexeme :: category`, `@raise <word...> <q> <s>`,
  // `@tset <cat>, <cat>, ...`, `#` comments.
  static Lexicon load(std::string_view text);
  static Lexicon load_file(const std::string& path);

 private:
  std::vector<LexEntry> entries_;
  std::vector<Category> tset_;
  std::vector<std::string> warnings_;
  std::map<std::string, std::vector<std::size_t>> by_first_;
  std::map<std::string, bool> seen_;
  VarSupply supply_;
};

// Lowercased words; commas are kept as "," tokens, other punctuation is dropped.
std::vector<std::string> tokenize(std::string_view sentence);

std::string join_tokens(const std::vector<std::string>& tokens, std::size_t begin,
                        std::size_t end);

// Directory holding the bundled data files (fragment.lex, corpus.txt, ...).
std::string default_data_dir();

}  // namespace scopeccg
