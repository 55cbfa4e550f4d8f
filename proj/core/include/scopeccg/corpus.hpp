#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scopeccg/category.hpp"
#include "scopeccg/chart.hpp"

namespace scopeccg {

// `count<TAB>sentence` or `UNGRAMMATICAL<TAB>fragment ⊣ category`.
struct CorpusEntry {
  enum class Kind { Count, Ungrammatical };
  Kind kind = Kind::Count;
  std::size_t expected = 0;
  std::string sentence;
  std::string context;  // category shape for Ungrammatical entries
  std::size_t line = 0;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::string& path);

// sentence -> marked skeleton text
std::map<std::string, std::string> parse_skeletons(std::string_view text);
std::map<std::string, std::string> load_skeletons(const std::string& path);

std::string read_file(const std::string& path);

// True iff some full-span item of `chart` has the shape of `context`.
bool has_constituent_of_shape(const Chart& chart, const Category& context);

struct CorpusResult {
  const CorpusEntry* entry = nullptr;
  bool pass = false;
  std::size_t actual = 0;  // reading count, or matching items for negatives
  std::string error;
};

CorpusResult run_entry(const Lexicon& lex, const CorpusEntry& entry,
                       const ParseOptions& opts = {});

}  // namespace scopeccg
