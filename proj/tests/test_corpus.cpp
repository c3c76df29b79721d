#include <sstream>

#include "doctest.h"
#include "wsd/corpus.hpp"
#include "wsd/error.hpp"
#include "wsd/lexicon.hpp"

using namespace wsd;

namespace {

std::vector<Document> canonical(const std::string& text) {
  std::istringstream in(text);
  return parse_canonical(in);
}

AnswerKey key_of(const std::string& text) {
  std::istringstream in(text);
  return parse_key(in);
}

Predictions predictions_of(const std::string& text) {
  std::istringstream in(text);
  return parse_predictions(in);
}

}  // namespace

TEST_CASE("canonical documents parse tokens, lemmas and instance ids") {
  const auto docs = canonical(
      "#doc d1\n"
      "The DT - -\n"
      "Bank NN Bank d1.t1\n"
      "flows VBZ flow d1.t2\n"
      "\n"
      "#doc d2\n"
      "quickly RB quickly -\n");
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].id == "d1");
  REQUIRE(docs[0].tokens.size() == 3);
  CHECK(docs[0].tokens[0].pos == Pos::other);
  CHECK(docs[0].tokens[0].lemma.empty());
  CHECK(docs[0].tokens[1].lemma == "bank");
  CHECK(docs[0].tokens[1].pos == Pos::noun);
  CHECK(docs[0].tokens[1].instance_id == "d1.t1");
  CHECK(docs[0].tokens[2].pos == Pos::verb);
  CHECK(docs[1].tokens[0].pos == Pos::adverb);
  CHECK_FALSE(docs[1].tokens[0].instance_id.has_value());
}

TEST_CASE("canonical parse errors carry the line number") {
  CHECK_THROWS_WITH_AS(canonical("#doc d\nbank NN bank\n"), "<corpus>:2: expected 4 fields, got 3",
                       ParseError);
  CHECK_THROWS_AS(canonical("#doc d\nbank QQ bank i1\n"), ParseError);
  CHECK_THROWS_AS(canonical("bank NN bank i1\n"), ParseError);
  CHECK_THROWS_AS(canonical("#doc d\nbank NN bank i1\nriver NN river i1\n"), ParseError);
  CHECK_THROWS_AS(canonical("#doc d\n\n#doc d\n"), ParseError);
  CHECK_THROWS_AS(canonical("#doc d\n\nriver NN river i1\n"), ParseError);
}

TEST_CASE("an annotated token without a lemma counts as a function word") {
  const auto docs = canonical("#doc d\nthe NN - -\n");
  CHECK(docs[0].tokens[0].pos == Pos::other);
}

TEST_CASE("serialize then parse round-trips a document") {
  Document doc{"doc-7", {}};
  doc.tokens.push_back({"The", "", Pos::other, std::nullopt});
  doc.tokens.push_back({"banks", "bank", Pos::noun, "i1"});
  doc.tokens.push_back({"grow", "grow", Pos::verb, "i2"});
  doc.tokens.push_back({"green", "green", Pos::adjective, std::nullopt});
  doc.tokens.push_back({"slowly", "slowly", Pos::adverb, "i3"});
  const auto back = canonical(serialize_document(doc));
  REQUIRE(back.size() == 1);
  CHECK(back[0] == doc);
  CHECK(serialize_document(Document{}).empty());
  CHECK(canonical(serialize_document(Document{})).empty());
}

TEST_CASE("senseval xml yields documents with instances and plain words") {
  std::istringstream in(
      "<?xml version=\"1.0\"?>\n"
      "<corpus lang=\"en\">\n"
      "<!-- a comment <text> -->\n"
      "<text id=\"d001\">\n"
      "<sentence id=\"d001.s001\">\n"
      "<wf lemma=\"the\" pos=\"DET\">The</wf>\n"
      "<instance id=\"d001.s001.t001\" lemma=\"Bank\" pos=\"NOUN\">bank</instance>\n"
      "<wf lemma=\"lend\" pos=\"VERB\">lends</wf> money &amp; more\n"
      "<instance id=\"d001.s001.t002\" lemma=\"interest_rate\" pos=\"NOUN\">interest\n rate</instance>\n"
      "</sentence>\n"
      "</text>\n"
      "</corpus>\n");
  const auto docs = parse_senseval_xml(in);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].id == "d001");
  const auto& t = docs[0].tokens;
  REQUIRE(t.size() == 7);
  CHECK(t[0].pos == Pos::other);
  CHECK(t[1].lemma == "bank");
  CHECK(t[1].instance_id == "d001.s001.t001");
  CHECK(t[2].pos == Pos::verb);
  CHECK_FALSE(t[2].instance_id.has_value());
  CHECK(t[3].surface == "money");
  CHECK(t[4].surface == "&");
  CHECK(t[6].surface == "interest_rate");
  CHECK(t[6].lemma == "interest_rate");
}

TEST_CASE("senseval xml errors") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_senseval_xml(in);
  };
  CHECK_THROWS_AS(parse("<text id=\"a\">\n<instance id=\"x\" lemma=\"bank\" pos=\"ZZ\">bank</instance></text>"),
                  ParseError);
  CHECK_THROWS_AS(parse("<text id=\"a\"><instance id=\"x\" lemma=\"bank\" pos=\"N\">bank"), ParseError);
  CHECK_THROWS_AS(parse("<text id=\"a\">"), ParseError);
  CHECK_THROWS_AS(parse("<text id=\"a\"></text><text id=\"a\"></text>"), ParseError);
}

TEST_CASE("key files allow several acceptable senses") {
  const AnswerKey key = key_of("d1 i1 bank%n#1 bank%n#3\nd1 i2 river%n#1\n\n");
  REQUIRE(key.entries.size() == 2);
  CHECK(key.entries.at({"d1", "i1"}).size() == 2);
  CHECK_THROWS_AS(key_of("d1 i1\n"), ParseError);
  CHECK_THROWS_AS(key_of("d1 i1 a\nd1 i1 b\n"), ParseError);
  CHECK_THROWS_AS(predictions_of("d1 i1 a b\n"), ParseError);
  CHECK_THROWS_AS(predictions_of("d1 i1 a\nd1 i1 a\n"), ParseError);
}

TEST_CASE("scoring follows precision, recall and F1 over the key") {
  const AnswerKey key = key_of("d i1 a\nd i2 b\nd i3 c\nd i4 d\n");

  SUBCASE("all correct") {
    const auto r = score(predictions_of("d i1 a\nd i2 b\nd i3 c\nd i4 d\n"), key);
    CHECK(r.f1 == doctest::Approx(1.0));
  }
  SUBCASE("three of four") {
    const auto r = score(predictions_of("d i1 a\nd i2 b\nd i3 c\nd i4 x\n"), key);
    CHECK(r.precision == doctest::Approx(0.75));
    CHECK(r.recall == doctest::Approx(0.75));
    CHECK(r.f1 == doctest::Approx(0.75));
  }
  SUBCASE("half attempted, all attempted correct") {
    const auto r = score(predictions_of("d i1 a\nd i2 b\n"), key);
    CHECK(r.attempted == 2);
    CHECK(r.total == 4);
    CHECK(r.precision == doctest::Approx(1.0));
    CHECK(r.recall == doctest::Approx(0.5));
    CHECK(r.f1 == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("nothing attempted") {
    const auto r = score({}, key);
    CHECK(r.precision == 0.0);
    CHECK(r.recall == 0.0);
    CHECK(r.f1 == 0.0);
  }
  SUBCASE("predictions outside the key are counted but not attempted") {
    const auto r = score(predictions_of("d i1 a\nz i9 q\n"), key);
    CHECK(r.attempted == 1);
    CHECK(r.unknown == 1);
    CHECK(r.correct == 1);
  }
}

TEST_CASE("any acceptable key sense counts as correct") {
  const AnswerKey key = key_of("d i1 a b\n");
  CHECK(score(predictions_of("d i1 b\n"), key).correct == 1);
}

TEST_CASE("most common sense baseline picks sense one") {
  const Lexicon lex = load_toy_lexicon(WSD_TEST_DATA_DIR "/toy_lexicon.txt");
  const auto docs = canonical(
      "#doc d\n"
      "bank NN bank i1\n"
      "of IN - -\n"
      "bass NN bass i2\n"
      "zebra NN zebra i3\n"
      "river NN river -\n");
  const auto baseline = mcs_baseline(docs[0], lex);
  CHECK(baseline.size() == 2);
  CHECK(baseline.at("i1") == "bank%n#1");
  CHECK(baseline.at("i2") == "bass%n#1");
}

TEST_CASE("load_document reads a single document") {
  CHECK_THROWS_AS(load_document(WSD_TEST_DATA_DIR "/toy_corpus.txt", CorpusFormat::canonical),
                  ParseError);
  CHECK_THROWS_AS(load_document(WSD_TEST_DATA_DIR "/missing.txt", CorpusFormat::canonical),
                  LoadError);
  const Document doc = load_document(WSD_TEST_DATA_DIR "/ablation_document.txt", CorpusFormat::canonical);
  CHECK_FALSE(doc.tokens.empty());
}
