#include "scopeccg/lexicon.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace scopeccg {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

// Copy of `shape` with a fresh variable on every atomic leaf.
Category fresh_shape(const Category& shape, VarSupply& supply) {
  if (shape.is_atomic()) {
    const char* hint = shape.sort() == Sort::S ? "S" : shape.sort() == Sort::NP ? "X" : "N";
    Term v = supply.fresh(hint);
    return Category::atomic(shape.sort(), Term::var(v.var_id(), std::string(hint) + "_" +
                                                                   std::to_string(v.var_id())));
  }
  return Category::slash(shape.dir(), fresh_shape(shape.result(), supply),
                         fresh_shape(shape.arg(), supply));
}

}  // namespace

std::vector<LexEntry> instantiate_raised(const RaiseScheme& scheme,
                                         const std::vector<Category>& tset,
                                         VarSupply& supply) {
  std::vector<LexEntry> out;
  std::set<std::string> keys;
  auto emit = [&](Category cat, std::string tag) {
    if (keys.insert(variant_key(cat)).second)
      out.push_back(LexEntry{scheme.lexeme, std::move(cat), std::move(tag)});
  };

  for (const auto& shape : tset) {
    Sort core = shape.core().sort();
    if (core == Sort::NP || core == Sort::SBAR)
      throw std::invalid_argument("raising over '" + shape_string(shape) +
                                  "' has no argument position for np");
    for (Dir dir : {Dir::Forward, Dir::Backward}) {
      Dir inner = dir == Dir::Forward ? Dir::Backward : Dir::Forward;
      std::string arrow = dir == Dir::Forward ? ">" : "<";
      if (core == Sort::S) {
        // Wide: the quantifier wraps the core of the result copy of T.
        Category t = fresh_shape(shape, supply);
        Term x = supply.fresh("X");
        Term n = supply.fresh("N");
        Term body = t.core().sem();
        Category result =
            t.with_core_sem(Term::compound(scheme.quantifier, {x, n, body}));
        Category fn = Category::slash(inner, t, Category::atomic(Sort::NP, x));
        Category raised = Category::slash(dir, result, fn);
        emit(Category::slash(Dir::Forward, raised,
                             Category::atomic(Sort::N, Term::lam(x, n))),
             scheme.quantifier + arrow + shape_string(shape));
      }
      {
        // Narrow: the set form fills the np argument position.
        Category t = fresh_shape(shape, supply);
        Term n = supply.fresh("N");
        Category fn = Category::slash(
            inner, t, Category::atomic(Sort::NP, Term::compound(scheme.set_form, {n})));
        Category raised = Category::slash(dir, t, fn);
        emit(Category::slash(Dir::Forward, raised, Category::atomic(Sort::N, n)),
             scheme.set_form + arrow + shape_string(shape));
      }
    }
  }
  return out;
}

void Lexicon::add(LexEntry entry) {
  std::string key = join(entry.lexeme) + " :: " + variant_key(entry.category);
  if (seen_.count(key)) {
    warnings_.push_back("duplicate entry ignored: " + key);
    return;
  }
  seen_[key] = true;
  by_first_[entry.lexeme.front()].push_back(entries_.size());
  entries_.push_back(std::move(entry));
}

std::vector<LexMatch> Lexicon::lookup(const std::vector<std::string>& tokens,
                                      std::size_t position, VarSupply& supply) const {
  auto out = match(tokens, position, supply);
  if (out.empty())
    throw UnknownToken(position < tokens.size() ? tokens[position] : "", position);
  return out;
}

std::vector<LexMatch> Lexicon::match(const std::vector<std::string>& tokens,
                                     std::size_t position, VarSupply& supply) const {
  std::vector<LexMatch> out;
  if (position < tokens.size()) {
    auto it = by_first_.find(tokens[position]);
    if (it != by_first_.end()) {
      for (std::size_t idx : it->second) {
        const LexEntry& e = entries_[idx];
        if (position + e.lexeme.size() > tokens.size()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < e.lexeme.size() && ok; ++k)
          ok = tokens[position + k] == e.lexeme[k];
        if (ok) out.push_back(LexMatch{&e, e.lexeme.size(), freshen(e.category, supply)});
      }
    }
  }
  return out;
}

Lexicon Lexicon::load(std::string_view text) {
  Lexicon lex;
  std::vector<std::pair<RaiseScheme, std::size_t>> schemes;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.rfind("@raise", 0) == 0) {
      auto words = split_ws(std::string_view(line).substr(6));
      if (words.size() < 3) throw LexiconError("@raise needs <word...> <q-sym> <s-sym>", lineno);
      RaiseScheme rs;
      rs.set_form = words.back();
      words.pop_back();
      rs.quantifier = words.back();
      words.pop_back();
      rs.lexeme = words;
      schemes.emplace_back(std::move(rs), lineno);
      continue;
    }
    if (line.rfind("@tset", 0) == 0) {
      lex.tset_.clear();
      std::string rest = line.substr(5);
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        std::string item = trim(std::string_view(rest).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!item.empty()) {
          try {
            lex.tset_.push_back(parse_cat(item, lex.supply_));
          } catch (const ParseError& e) {
            throw LexiconError(std::string("bad @tset category: ") + e.what(), lineno);
          }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      continue;
    }
    if (line[0] == '@') throw LexiconError("unknown directive", lineno);
    std::size_t sep = line.find("::");
    if (sep == std::string::npos) throw LexiconError("expected 'lexeme :: category'", lineno);
    auto lexeme = split_ws(std::string_view(line).substr(0, sep));
    if (lexeme.empty()) throw LexiconError("empty lexeme", lineno);
    std::string cat_text = trim(std::string_view(line).substr(sep + 2));
    try {
      Category cat = parse_cat(cat_text, lex.supply_);
      lex.add(LexEntry{lexeme, cat, join(lexeme)});
    } catch (const ParseError& e) {
      throw LexiconError(e.what(), lineno);
    }
  }
  for (const auto& [scheme, line] : schemes) {
    try {
      for (auto& e : instantiate_raised(scheme, lex.tset_, lex.supply_)) lex.add(std::move(e));
    } catch (const std::invalid_argument& e) {
      throw LexiconError(e.what(), line);
    }
  }
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : sentence) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || c == '-' || c == '\'') {
      cur += static_cast<char>(std::tolower(uc));
    } else {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      if (c == ',') out.emplace_back(",");
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens, std::size_t begin,
                        std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end && i < tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("SCOPECCG_DATA")) return env;
#ifdef SCOPECCG_DATA_DIR
  return SCOPECCG_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace scopeccg
