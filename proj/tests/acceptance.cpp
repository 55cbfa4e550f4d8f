// Acceptance suite: one PASS/FAIL line per criterion.
//   scopeccg_acceptance          run all seven
//   scopeccg_acceptance <n>...   run the listed criteria
// Exit status is 0 iff every criterion run passed.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "random_terms.hpp"
#include "scopeccg/baseline.hpp"
#include "scopeccg/corpus.hpp"
#include "scopeccg/readings.hpp"

using namespace scopeccg;

namespace {

const std::string kData = SCOPECCG_TEST_DATA;

const Lexicon& fragment() {
  static const Lexicon lex = Lexicon::load_file(kData + "/fragment.lex");
  return lex;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

std::vector<Reading> readings_of(const std::string& s) { return readings(fragment(), s); }

std::set<std::string> printed(const std::vector<Reading>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(to_string(r.term));
  return out;
}

// --- 1 -------------------------------------------------------------------

Outcome reading_counts() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"three frenchmen visited five russians", 2},
      {"two representatives of three companies saw most samples", 4},
      {"every dealer shows most customers at most three cars", 6},
      {"most boys think that every man danced with two women", 4},
      {"john thinks that every man danced with two women", 2},
      {"most boys think that bill danced with two women", 2},
      {"every girl admired, but most boys detested, one saxophonist", 2},
      {"most boys think that every man danced with, but doubt that a few boys talked to, "
       "more than two women",
       2},
      {"some student will investigate two dialects of, and collect all interesting examples "
       "of coordination in, every language",
       2},
  };
  for (const auto& [s, n] : expected) {
    std::size_t got = readings_of(s).size();
    o.expect(got == n, "'" + s + "': " + std::to_string(got) + " readings, expected " +
                           std::to_string(n));
  }
  // The two conjoined-subject readings, written as the unnormalized forms the
  // two sample derivations produce.
  auto geach = printed(readings_of("every girl admired, but most boys detested, one saxophonist"));
  for (const char* lf :
       {"and(q-every(X,girl(X),admired(X,s-one(Y^sax(Y)))),"
        "q-most(Z,boy(Z),detested(Z,s-one(Y^sax(Y)))))",
        "q-one(Y,sax(Y),and(admired(s-every(X^girl(X)),Y),detested(s-most(Z^boy(Z)),Y)))"}) {
    std::string n = to_string(normalize(parse_term(lf)));
    o.expect(geach.count(n) == 1, "conjoined-subject reading missing: " + n);
  }
  return o;
}

// --- 2 -------------------------------------------------------------------

bool between(const Term& t, const std::string& a, const std::string& mid, const std::string& b) {
  return outscopes(t, a, mid) && outscopes(t, mid, b);
}

Outcome exclusions() {
  Outcome o;
  for (const auto& r : readings_of("two representatives of three companies saw most samples")) {
    std::string lf = to_string(r.term);
    o.expect(!between(r.term, "two:rep", "most:samp", "three:comp"), "two > most > three: " + lf);
    o.expect(!between(r.term, "three:comp", "most:samp", "two:rep"), "three > most > two: " + lf);
  }
  const std::string s24 = "every dealer shows most customers three cars but most mechanics every car";
  auto rs = readings_of(s24);
  for (const auto& r : rs) {
    std::string lf = to_string(r.term);
    o.expect(!between(r.term, "most:cstmr", "every:dlr", "three:car"),
             "every dealer between most customers and three cars: " + lf);
    o.expect(!between(r.term, "three:car", "every:dlr", "most:cstmr"),
             "every dealer between three cars and most customers: " + lf);
  }
  std::size_t recorded = 0;
  for (const auto& e : load_corpus(kData + "/corpus.txt"))
    if (e.sentence == s24) recorded = e.expected;
  o.expect(recorded > 0, "no regression value for the gapping sentence in corpus.txt");
  o.expect(rs.size() == recorded, "gapping sentence: " + std::to_string(rs.size()) +
                                       " readings, recorded " + std::to_string(recorded));
  return o;
}

// --- 3 -------------------------------------------------------------------

bool contains_quantifier(const Term& t, const std::string& name) {
  if (t.is_compound() && t.name() == name) return true;
  for (const auto& a : t.args())
    if (contains_quantifier(a, name)) return true;
  return false;
}

bool category_contains(const Category& c, const std::string& name) {
  if (c.is_atomic()) return contains_quantifier(c.sem(), name);
  return category_contains(c.result(), name) || category_contains(c.arg(), name);
}

Outcome negative_derivation() {
  Outcome o;
  Chart bad = parse(fragment(), tokenize("of three companies touched"));
  Category tv = parse_cat("(s\\np)/np");
  o.expect(!has_constituent_of_shape(bad, tv), "'of three companies touched' derives (s\\np)/np");
  o.expect(bad.full_span().empty(), "'of three companies touched' has a full-span constituent");

  Chart good = parse(fragment(), tokenize("investigate two dialects of"));
  bool found = false;
  for (int id : good.full_span()) {
    const Category& c = good.item(id).category;
    if (!c.same_shape(tv)) continue;
    found = true;
    o.expect(!category_contains(c, "q-two"), "q-two in " + to_string(c));
    const Term& core = c.core().sem();
    bool arg = false;
    for (const auto& a : core.args()) arg |= a.is_compound() && a.name() == "s-two";
    o.expect(arg, "s-two is not an argument of the core: " + to_string(c));
  }
  o.expect(found, "'investigate two dialects of' has no (s\\np)/np constituent");
  return o;
}

// --- 4 -------------------------------------------------------------------

Outcome baseline_contrast() {
  Outcome o;
  auto skels = load_skeletons(kData + "/corpus.skel");
  struct Case {
    std::string sentence;
    std::size_t total, uvc;
    std::vector<std::string> gap;
  };
  const std::vector<Case> cases = {
      {"two representatives of three companies saw most samples", 6, 5, {"three > most > two"}},
      {"every dealer shows most customers at most three cars", 6, 6, {}},
  };
  for (const auto& c : cases) {
    auto it = skels.find(c.sentence);
    if (it == skels.end()) {
      o.fail("no skeleton for '" + c.sentence + "'");
      continue;
    }
    auto rep = compare(readings_of(c.sentence), parse_skeleton(it->second));
    o.expect(rep.baseline_total == c.total, c.sentence + ": orderings " +
                                                std::to_string(rep.baseline_total));
    o.expect(rep.baseline_uvc == c.uvc, c.sentence + ": UVC " + std::to_string(rep.baseline_uvc));
    std::vector<std::string> gap;
    for (const auto& f : rep.gap) gap.push_back(format_order(f.order));
    o.expect(gap == c.gap, c.sentence + ": gap has " + std::to_string(gap.size()) + " orders");
  }
  return o;
}

// --- 5 -------------------------------------------------------------------

bool is_leaf(const Term& t) { return t.is_compound() && t.name() == "q?"; }

bool has_leaf(const Term& t) {
  if (is_leaf(t)) return true;
  for (const auto& a : t.args())
    if (has_leaf(a)) return true;
  return false;
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void direct_leaves(const Term& t, std::vector<Term>& out) {
  if (is_leaf(t)) {
    out.push_back(t);
    return;
  }
  for (const auto& a : t.args()) direct_leaves(a, out);
}

// Product over semantic functions of k! where k counts the argument
// positions holding a quantified NP or a clause containing one. A quantified
// NP whose restriction holds m further NPs is a function of m + 1 of them.
std::uint64_t factorial_oracle(const Term& t) {
  if (is_leaf(t)) {
    std::vector<Term> nested;
    direct_leaves(t.arg(2), nested);
    std::uint64_t p = nested.empty() ? 1 : factorial(nested.size() + 1);
    for (const auto& n : nested) p *= factorial_oracle(n);
    return p;
  }
  std::uint64_t k = 0, p = 1;
  for (const auto& a : t.args()) {
    if (is_leaf(a) || (a.is_up() && has_leaf(a))) ++k;
    p *= factorial_oracle(a);
  }
  return t.is_compound() ? p * factorial(k) : p;
}

Outcome factorial_law() {
  Outcome o;
  auto skels = load_skeletons(kData + "/corpus.skel");
  o.expect(skels.size() >= 6, "fewer than six skeletons");
  for (const auto& [sentence, text] : skels) {
    std::uint64_t want = factorial_oracle(parse_term(text));
    std::size_t got = readings_of(sentence).size();
    o.expect(got == want, "'" + sentence + "': " + std::to_string(got) + " readings, oracle " +
                              std::to_string(want));
  }
  return o;
}

// --- 6 -------------------------------------------------------------------

Outcome invariants() {
  Outcome o;
  auto mgu = testing_support::check_mgu(1000, 4, 7);
  for (const auto& f : mgu.failures) o.fail("unify: " + f);

  std::size_t replayed = 0;
  for (const auto& e : load_corpus(kData + "/corpus.txt")) {
    if (e.kind != CorpusEntry::Kind::Count) continue;
    auto tokens = tokenize(e.sentence);
    Chart a = parse(fragment(), tokens);
    Chart b = parse(fragment(), tokens);
    bool same = a.items().size() == b.items().size();
    for (std::size_t i = 0; same && i < a.items().size(); ++i)
      same = a.items()[i].key == b.items()[i].key &&
             a.items()[i].begin == b.items()[i].begin &&
             a.items()[i].backpointers.size() == b.items()[i].backpointers.size();
    o.expect(same, "dedup differs between runs: " + e.sentence);

    for (int id : a.full_span_sentences()) {
      Term n = normalize(a.item(id).category.sem());
      o.expect(normalize(n) == n, "normalize not idempotent: " + to_string(n));
      o.expect(canonicalize(n) == n, "normalized form not canonical: " + to_string(n));
      o.expect(canonicalize(canonicalize(n)) == canonicalize(n), "canonicalize not idempotent");
    }
    for (int id : a.full_span()) {
      for (const auto& d : derivations(a, id)) {
        ++replayed;
        auto r = replay(d);
        if (!r || variant_key(*r) != a.item(id).key) {
          o.fail("replay mismatch in '" + e.sentence + "'");
          break;
        }
      }
    }
  }
  o.notes.push_back(std::to_string(mgu.pairs) + " unification pairs (" +
                    std::to_string(mgu.unified) + " unifiable), " + std::to_string(replayed) +
                    " derivations replayed");
  return o;
}

// --- 7 -------------------------------------------------------------------

Outcome golden_derivations() {
  Outcome o;
  const std::vector<std::string> files = {
      "admired_object_wide",   "admired_subject_wide",          "conjoined_subjects_wide",
      "conjoined_object_wide", "modifier_np_wide",              "modifier_np_narrow",
      "ditransitive_most_every_three", "investigate_dialects_of"};
  for (const auto& name : files) {
    std::ifstream in(kData + "/golden/" + name + ".txt");
    if (!in) {
      o.fail("missing golden file " + name);
      continue;
    }
    std::string line, sentence;
    std::vector<std::string> want;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (line[0] == '#') sentence = line.substr(line.find_first_not_of("# "));
      else want.push_back(line);
    }
    Chart c = parse(fragment(), tokenize(sentence));
    bool match = false;
    for (int id : c.full_span()) {
      for (const auto& d : derivations(c, id))
        if (derivation_lines(d, c.tokens()) == want) match = true;
      if (match) break;
    }
    o.expect(match, name + ": no derivation of '" + sentence + "' matches");
  }
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"reading counts", reading_counts},
      {"scope-order exclusions", exclusions},
      {"negative derivation", negative_derivation},
      {"baseline contrast", baseline_contrast},
      {"factorial law", factorial_law},
      {"engine invariants", invariants},
      {"golden derivations", golden_derivations},
  };
  std::vector<std::size_t> chosen;
  for (int i = 1; i < argc; ++i) {
    int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(all.size())) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-7]...\n";
      return 2;
    }
    chosen.push_back(static_cast<std::size_t>(n));
  }
  if (chosen.empty())
    for (std::size_t i = 1; i <= all.size(); ++i) chosen.push_back(i);

  bool ok = true;
  for (std::size_t n : chosen) {
    const auto& c = all[n - 1];
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    ok &= out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  " << n << "  " << c.title << "  (" << ms
              << " ms)\n";
    for (const auto& note : out.notes) std::cout << "      " << note << '\n';
  }
  return ok ? 0 : 1;
}
