#include <doctest.h>

#include "scopeccg/chart.hpp"
#include "scopeccg/readings.hpp"

using namespace scopeccg;

namespace {

const Lexicon& fragment() {
  static const Lexicon lex =
      Lexicon::load_file(std::string(SCOPECCG_TEST_DATA) + "/fragment.lex");
  return lex;
}

bool has_quantifier(const Term& t) {
  if (is_quantifier(t)) return true;
  for (const auto& a : t.args())
    if (has_quantifier(a)) return true;
  return false;
}

bool category_has_quantifier(const Category& c) {
  if (c.is_atomic()) return has_quantifier(c.sem());
  return category_has_quantifier(c.result()) || category_has_quantifier(c.arg());
}

}  // namespace

TEST_SUITE("chart") {
  TEST_CASE("the four rules") {
    VarSupply vs;
    auto tv = parse_cat("(s:saw(X,Y)\\np:X)/np:Y", vs);
    auto np = parse_cat("np:bill", vs);
    auto vp = fwd_apply(tv, np);
    REQUIRE(vp);
    CHECK(variant_key(*vp) == "s:saw(V1,bill)\\np:V1");
    auto s = bwd_apply(parse_cat("np:john", vs), *vp);
    REQUIRE(s);
    CHECK(to_string(s->sem()) == "saw(john,bill)");

    auto subj = parse_cat("s:S/(s:S\\np:john)", vs);
    auto sv = fwd_compose(subj, tv);
    REQUIRE(sv);
    CHECK(variant_key(*sv) == "s:saw(john,V1)/np:V1");

    auto obj = parse_cat("(s:T\\np:W)\\((s:T\\np:W)/np:bill)", vs);
    auto verb = parse_cat("((s:show(X,Y,Z)\\np:X)/np:Z)/np:Y", vs);
    auto g = parse_cat("((s:R\\np:A)/np:B)\\(((s:R\\np:A)/np:B)/np:mary)", vs);
    auto cluster = bwd_compose(g, obj);
    REQUIRE(cluster);
    auto applied = bwd_apply(verb, *cluster);
    REQUIRE(applied);
    CHECK(variant_key(*applied) == "s:show(V1,mary,bill)\\np:V1");
    CHECK_FALSE(fwd_apply(np, tv));
    CHECK_FALSE(bwd_apply(np, tv));
  }

  TEST_CASE("set-forms are stamped when they reach an s core") {
    VarSupply vs;
    auto vp = parse_cat("s:saw(X,s-two(Y^w(Y)))\\np:X", vs);
    auto subj = parse_cat("np:s-most(Z^b(Z))", vs);
    auto s = combine(Rule::BwdApply, subj, vp);
    REQUIRE(s);
    std::string printed = to_string(s->sem(), true);
    CHECK(printed.find("s-most(") != std::string::npos);
    CHECK(printed.find("@1") != std::string::npos);
    // A set-form inside an np core is not stamped.
    auto det = parse_cat("np:s-two(N)/n:N", vs);
    auto noun = parse_cat("n:X^w(X)", vs);
    auto np = combine(Rule::FwdApply, det, noun);
    REQUIRE(np);
    CHECK(np->sem().stamp() == 0);
  }

  TEST_CASE("clause island: only a sole quantifier binds into an up clause") {
    VarSupply vs;
    ParseOptions on;
    ParseOptions off;
    off.clause_island = false;
    auto f = parse_cat("s:S/(s:S\\np:X)", vs);
    auto bad = parse_cat(
        "s:q-two(Y,w(Y),q-most(X,b(X),think(X,up(d(Y)))))\\np:Z", vs);
    auto sole = parse_cat("s:q-two(Y,w(Y),think(Z,up(d(Y))))\\np:Z", vs);
    CHECK_FALSE(combine(Rule::FwdApply, f, bad, on));
    CHECK(combine(Rule::FwdApply, f, bad, off));
    CHECK(combine(Rule::FwdApply, f, sole, on));
  }

  TEST_CASE("comma brackets constrain constituents") {
    auto with = parse(fragment(), tokenize("every girl admired, but most boys detested, one saxophonist"));
    auto without = parse(fragment(), tokenize("every girl admired but most boys detested one saxophonist"));
    CHECK(with.tokens().size() == without.tokens().size());
    REQUIRE(with.brackets().size() == 1);
    CHECK(with.brackets()[0] == std::pair<std::size_t, std::size_t>{3, 7});
    CHECK(with.cell(4, 9).empty());
    CHECK(with.items().size() <= without.items().size());
  }

  TEST_CASE("a derived fragment keeps s-two in argument position") {
    Chart c = parse(fragment(), tokenize("investigate two dialects of"));
    auto ids = c.full_span();
    REQUIRE(ids.size() == 1);
    const Category& cat = c.item(ids[0]).category;
    CHECK(shape_string(cat) == "(s\\np)/np");
    CHECK_FALSE(category_has_quantifier(cat));
    CHECK(to_string(cat.core().sem()).find("s-two(") != std::string::npos);
  }

  TEST_CASE("replay reproduces every derivation") {
    Chart c = parse(fragment(), tokenize("two representatives of three companies saw most samples"));
    std::size_t n = 0;
    for (int id : c.full_span()) {
      for (const auto& d : derivations(c, id)) {
        auto r = replay(d);
        REQUIRE(r);
        CHECK(variant_key(*r) == c.item(id).key);
        ++n;
      }
      CHECK(derivations(c, id).size() == c.derivation_count(id));
    }
    CHECK(n == sentence_derivations(c));
  }

  TEST_CASE("dedup is deterministic") {
    auto toks = tokenize("every dealer shows most customers at most three cars");
    Chart a = parse(fragment(), toks), b = parse(fragment(), toks);
    REQUIRE(a.items().size() == b.items().size());
    for (std::size_t i = 0; i < a.items().size(); ++i) {
      CHECK(a.items()[i].key == b.items()[i].key);
      CHECK(a.items()[i].backpointers.size() == b.items()[i].backpointers.size());
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(parse(fragment(), tokenize("every unicorn admired bill")), UnknownToken);
    ParseOptions tiny;
    tiny.max_tokens = 3;
    CHECK_THROWS_AS(parse(fragment(), tokenize("every girl admired bill"), tiny), ResourceError);
    CHECK(parse(fragment(), tokenize("of three companies touched")).full_span().empty());
  }

  TEST_CASE("derivation lines") {
    Chart c = parse(fragment(), tokenize("john saw bill"));
    auto ids = c.full_span_sentences();
    REQUIRE_FALSE(ids.empty());
    auto ds = derivations(c, ids[0], 1);
    REQUIRE(ds.size() == 1);
    auto lines = derivation_lines(ds[0], c.tokens());
    CHECK(lines.back().rfind("<\tjohn saw bill\ts:saw(john,bill)", 0) == 0);
  }
}
