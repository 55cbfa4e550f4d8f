#include <CLI11.hpp>
#include <json.hpp>

#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "scopeccg/baseline.hpp"
#include "scopeccg/chart.hpp"
#include "scopeccg/corpus.hpp"
#include "scopeccg/lexicon.hpp"
#include "scopeccg/readings.hpp"

using json = nlohmann::json;
using namespace scopeccg;

namespace {

enum Exit { kOk = 0, kNoParse = 1, kUsage = 2, kMismatch = 3 };

struct Config {
  std::string lexicon;
  std::string sentence;
  std::string corpus;
  std::string skeletons;
  bool json = false;
  std::size_t max_derivations = 20;
};

json reading_json(const Reading& r) {
  json pairs = json::array();
  for (const auto& [a, b] : outscope_pairs(r.term)) pairs.push_back({a, b});
  return {{"lf", to_string(r.term)}, {"multiplicity", r.multiplicity}, {"outscopes", pairs}};
}

void print_reading(std::ostream& os, std::size_t i, const Reading& r) {
  os << "[" << i << "] " << to_string(r.term) << "  x" << r.multiplicity << '\n';
  for (const auto& [a, b] : outscope_pairs(r.term)) os << "    " << a << " > " << b << '\n';
}

int cmd_parse(const Lexicon& lex, const Config& cfg) {
  auto tokens = tokenize(cfg.sentence);
  Chart chart = parse(lex, tokens);
  auto ids = chart.full_span();
  if (cfg.json) {
    json items = json::array();
    for (int id : ids)
      items.push_back({{"category", to_string(variant_rename(chart.item(id).category))},
                       {"derivations", chart.derivation_count(id)}});
    std::cout << json{{"sentence", cfg.sentence}, {"tokens", tokens}, {"items", items}}.dump(2)
              << '\n';
  } else {
    std::cout << ids.size() << " full-span item(s), " << chart.items().size()
              << " chart items\n";
    for (int id : ids)
      std::cout << to_string(variant_rename(chart.item(id).category)) << "  x"
                << chart.derivation_count(id) << '\n';
  }
  return ids.empty() ? kNoParse : kOk;
}

int cmd_readings(const Lexicon& lex, const Config& cfg) {
  auto tokens = tokenize(cfg.sentence);
  Chart chart = parse(lex, tokens);
  if (chart.full_span_sentences().empty()) {
    std::cerr << "no parse: " << cfg.sentence << '\n';
    return kNoParse;
  }
  auto rs = readings(chart);
  if (cfg.json) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(reading_json(r));
    std::cout << json{{"sentence", cfg.sentence},
                      {"tokens", tokens},
                      {"readings", arr},
                      {"derivation_count", sentence_derivations(chart)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << rs.size() << " reading(s) from " << sentence_derivations(chart)
              << " derivation(s)\n";
    for (std::size_t i = 0; i < rs.size(); ++i) print_reading(std::cout, i + 1, rs[i]);
  }
  return kOk;
}

int cmd_derive(const Lexicon& lex, const Config& cfg) {
  auto tokens = tokenize(cfg.sentence);
  Chart chart = parse(lex, tokens);
  auto ids = chart.full_span();
  if (ids.empty()) {
    std::cerr << "no parse: " << cfg.sentence << '\n';
    return kNoParse;
  }
  std::size_t shown = 0;
  json out = json::array();
  for (int id : ids) {
    if (shown >= cfg.max_derivations) break;
    for (const auto& d : derivations(chart, id, cfg.max_derivations - shown)) {
      ++shown;
      const Category& cat = chart.item(id).category;
      std::string lf;
      if (cat.is_atomic() && cat.sort() == Sort::S) lf = to_string(normalize(cat.sem()));
      if (cfg.json) {
        out.push_back({{"lines", derivation_lines(d, chart.tokens())}, {"reading", lf}});
      } else {
        std::cout << "# derivation " << shown;
        if (!lf.empty()) std::cout << "  => " << lf;
        std::cout << '\n' << format_derivation(d, chart.tokens()) << '\n';
      }
    }
  }
  if (cfg.json)
    std::cout << json{{"sentence", cfg.sentence}, {"derivations", out}}.dump(2) << '\n';
  return kOk;
}

int cmd_compare(const Lexicon& lex, const Config& cfg) {
  std::string skel_path =
      cfg.skeletons.empty() ? default_data_dir() + "/corpus.skel" : cfg.skeletons;
  auto skels = load_skeletons(skel_path);
  auto it = skels.find(join_tokens(tokenize(cfg.sentence), 0, std::string::npos));
  if (it == skels.end()) {
    std::cerr << "no skeleton for '" << cfg.sentence << "' in " << skel_path << '\n';
    return kUsage;
  }
  Chart chart = parse(lex, tokenize(cfg.sentence));
  if (chart.full_span_sentences().empty()) {
    std::cerr << "no parse: " << cfg.sentence << '\n';
    return kNoParse;
  }
  auto rs = readings(chart);
  QSkeleton sk = parse_skeleton(it->second);
  CompareReport rep = compare(rs, sk);
  if (cfg.json) {
    json gap = json::array();
    for (const auto& f : rep.gap)
      gap.push_back({{"order", f.order}, {"lf", to_string(canonicalize(f.term))}});
    json extra = json::array();
    for (const auto& r : rep.unmatched_ccg) extra.push_back(to_string(r.term));
    std::cout << json{{"sentence", cfg.sentence},
                      {"baseline_orderings", rep.baseline_total},
                      {"baseline_uvc", rep.baseline_uvc},
                      {"ccg_readings", rep.ccg_count},
                      {"gap", gap},
                      {"ccg_without_baseline", extra}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "baseline orderings: " << rep.baseline_total << '\n'
              << "surviving UVC:      " << rep.baseline_uvc << '\n'
              << "CCG readings:       " << rep.ccg_count << '\n'
              << "baseline forms with no CCG reading: " << rep.gap.size() << '\n';
    for (const auto& f : rep.gap)
      std::cout << "  " << format_order(f.order) << "   " << to_string(canonicalize(f.term))
                << '\n';
    for (const auto& r : rep.unmatched_ccg)
      std::cout << "CCG reading with no baseline form: " << to_string(r.term) << '\n';
  }
  return kOk;
}

int cmd_corpus(const Lexicon& lex, const Config& cfg) {
  std::string path = cfg.corpus.empty() ? default_data_dir() + "/corpus.txt" : cfg.corpus;
  auto entries = load_corpus(path);
  std::vector<std::future<CorpusResult>> jobs;
  for (const auto& e : entries)
    jobs.push_back(std::async(std::launch::async, [&lex, &e] { return run_entry(lex, e); }));
  bool all = true;
  json rows = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CorpusResult r = jobs[i].get();
    const CorpusEntry& e = entries[i];
    all &= r.pass;
    bool neg = e.kind == CorpusEntry::Kind::Ungrammatical;
    if (cfg.json) {
      json row{{"sentence", e.sentence}, {"pass", r.pass}};
      if (neg) {
        row["context"] = e.context;
        row["matching_items"] = r.actual;
      } else {
        row["expected"] = e.expected;
        row["actual"] = r.actual;
      }
      if (!r.error.empty()) row["error"] = r.error;
      rows.push_back(row);
    } else {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  ";
      if (neg)
        std::cout << "no " << e.context << " (found " << r.actual << ")  ";
      else
        std::cout << "expected " << e.expected << " actual " << r.actual << "  ";
      std::cout << e.sentence;
      if (!r.error.empty()) std::cout << "  [" << r.error << "]";
      std::cout << '\n';
    }
  }
  if (cfg.json) std::cout << json{{"entries", rows}, {"pass", all}}.dump(2) << '\n';
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parse sentences of an English fragment and count quantifier scope readings"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--lexicon", cfg.lexicon, "Lexicon file (default: bundled fragment.lex)");
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--max-derivations", cfg.max_derivations, "Cap on derivations printed")
      ->check(CLI::PositiveNumber);

  auto* parse_cmd = app.add_subcommand("parse", "List full-span chart items");
  auto* readings_cmd = app.add_subcommand("readings", "List normalized readings");
  auto* derive_cmd = app.add_subcommand("derive", "Print derivations");
  auto* compare_cmd = app.add_subcommand("compare", "Compare with the ordering baseline");
  auto* corpus_cmd = app.add_subcommand("corpus", "Run a corpus file");
  for (auto* c : {parse_cmd, readings_cmd, derive_cmd, compare_cmd})
    c->add_option("sentence", cfg.sentence, "Sentence")->required();
  compare_cmd->add_option("--skeletons", cfg.skeletons, "Skeleton file (default: corpus.skel)");
  corpus_cmd->add_option("file", cfg.corpus, "Corpus file (default: bundled corpus.txt)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Lexicon lex = Lexicon::load_file(cfg.lexicon.empty() ? default_data_dir() + "/fragment.lex"
                                                         : cfg.lexicon);
    for (const auto& w : lex.warnings()) std::cerr << "warning: " << w << '\n';
    if (*parse_cmd) return cmd_parse(lex, cfg);
    if (*readings_cmd) return cmd_readings(lex, cfg);
    if (*derive_cmd) return cmd_derive(lex, cfg);
    if (*compare_cmd) return cmd_compare(lex, cfg);
    return cmd_corpus(lex, cfg);
  } catch (const UnknownToken& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LexiconError& e) {
    std::cerr << "lexicon error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoParse& e) {
    std::cerr << "no parse: " << e.what() << '\n';
    return kNoParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
