#include <doctest.h>

#include "scopeccg/corpus.hpp"
#include "scopeccg/readings.hpp"

using namespace scopeccg;

TEST_SUITE("corpus") {
  TEST_CASE("entry kinds") {
    auto es = parse_corpus(
        "# comment\n"
        "2\tthree frenchmen visited five russians\n"
        "\n"
        "UNGRAMMATICAL\tof three companies touched \xE2\x8A\xA3 (s\\np)/np\n");
    REQUIRE(es.size() == 2);
    CHECK(es[0].kind == CorpusEntry::Kind::Count);
    CHECK(es[0].expected == 2);
    CHECK(es[0].line == 2);
    CHECK(es[1].kind == CorpusEntry::Kind::Ungrammatical);
    CHECK(es[1].sentence == "of three companies touched");
    CHECK(es[1].context == "(s\\np)/np");
  }

  TEST_CASE("malformed entries") {
    CHECK_THROWS_AS(parse_corpus("two\tjohn saw bill\n"), CorpusError);
    CHECK_THROWS_AS(parse_corpus("2 john saw bill\n"), CorpusError);
    CHECK_THROWS_AS(parse_corpus("UNGRAMMATICAL\tof three companies touched\n"), CorpusError);
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.txt"), CorpusError);
  }

  TEST_CASE("running entries") {
    Lexicon lex = Lexicon::load_file(std::string(SCOPECCG_TEST_DATA) + "/fragment.lex");
    auto es = parse_corpus(
        "2\tjohn thinks that every man danced with two women\n"
        "3\tjohn thinks that every man danced with two women\n"
        "UNGRAMMATICAL\tof three companies touched \xE2\x8A\xA3 (s\\np)/np\n"
        "UNGRAMMATICAL\tinvestigate two dialects of \xE2\x8A\xA3 (s\\np)/np\n"
        "1\tjohn saw a unicorn\n");
    REQUIRE(es.size() == 5);
    CHECK(run_entry(lex, es[0]).pass);
    auto wrong = run_entry(lex, es[1]);
    CHECK_FALSE(wrong.pass);
    CHECK(wrong.actual == 2);
    CHECK(run_entry(lex, es[2]).pass);
    auto derivable = run_entry(lex, es[3]);
    CHECK_FALSE(derivable.pass);
    CHECK(derivable.actual == 1);
    auto unknown = run_entry(lex, es[4]);
    CHECK_FALSE(unknown.pass);
    CHECK_FALSE(unknown.error.empty());
  }

  TEST_CASE("bundled corpus and skeletons parse") {
    auto es = load_corpus(std::string(SCOPECCG_TEST_DATA) + "/corpus.txt");
    CHECK(es.size() >= 12);
    auto sk = load_skeletons(std::string(SCOPECCG_TEST_DATA) + "/corpus.skel");
    for (const auto& [sentence, text] : sk) {
      bool listed = false;
      for (const auto& e : es) listed |= e.sentence == sentence;
      CHECK_MESSAGE(listed, sentence);
    }
  }
}
