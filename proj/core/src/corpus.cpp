#include "scopeccg/corpus.hpp"

#include <fstream>
#include <sstream>

#include "scopeccg/readings.hpp"

namespace scopeccg {

namespace {

constexpr std::string_view kTurnstile = "\xE2\x8A\xA3";  // ⊣

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw CorpusError("line " + std::to_string(lineno) + ": no tab");
    std::string head = trim(line.substr(0, tab));
    std::string rest = trim(line.substr(tab + 1));
    CorpusEntry e;
    e.line = lineno;
    if (head == "UNGRAMMATICAL") {
      auto t = rest.find(kTurnstile);
      if (t == std::string::npos)
        throw CorpusError("line " + std::to_string(lineno) + ": missing context category");
      e.kind = CorpusEntry::Kind::Ungrammatical;
      e.sentence = trim(rest.substr(0, t));
      e.context = trim(rest.substr(t + kTurnstile.size()));
    } else {
      try {
        std::size_t used = 0;
        e.expected = std::stoul(head, &used);
        if (used != head.size()) throw std::invalid_argument(head);
      } catch (const std::exception&) {
        throw CorpusError("line " + std::to_string(lineno) + ": bad count '" + head + "'");
      }
      e.sentence = rest;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  return parse_corpus(read_file(path));
}

std::map<std::string, std::string> parse_skeletons(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw CorpusError("skeleton line without tab: " + line);
    out[trim(line.substr(0, tab))] = trim(line.substr(tab + 1));
  }
  return out;
}

std::map<std::string, std::string> load_skeletons(const std::string& path) {
  return parse_skeletons(read_file(path));
}

bool has_constituent_of_shape(const Chart& chart, const Category& context) {
  for (int id : chart.full_span())
    if (chart.item(id).category.same_shape(context)) return true;
  return false;
}

CorpusResult run_entry(const Lexicon& lex, const CorpusEntry& entry, const ParseOptions& opts) {
  CorpusResult r;
  r.entry = &entry;
  try {
    Chart chart = parse(lex, tokenize(entry.sentence), opts);
    if (entry.kind == CorpusEntry::Kind::Ungrammatical) {
      Category ctx = parse_cat(entry.context);
      std::size_t n = 0;
      for (int id : chart.full_span())
        if (chart.item(id).category.same_shape(ctx)) ++n;
      r.actual = n;
      r.pass = n == 0;
      return r;
    }
    r.actual = readings(chart).size();
    r.pass = r.actual == entry.expected;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.pass = false;
  }
  return r;
}

}  // namespace scopeccg
