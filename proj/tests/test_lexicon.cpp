#include <sstream>

#include "doctest.h"
#include "wsd/error.hpp"
#include "wsd/lexicon.hpp"
#include "wsd/text.hpp"
#include "wsd/vocabulary.hpp"

using namespace wsd;

namespace {

Lexicon toy(const std::string& text) {
  std::istringstream in(text);
  return parse_toy_lexicon(in);
}

const Lexicon& toy_lexicon() {
  static const Lexicon lex = load_toy_lexicon(WSD_TEST_DATA_DIR "/toy_lexicon.txt");
  return lex;
}

}  // namespace

TEST_CASE("pos tags map onto the four content classes") {
  CHECK(pos_from_tag("NNS") == Pos::noun);
  CHECK(pos_from_tag("nn") == Pos::noun);
  CHECK(pos_from_tag("VERB") == Pos::verb);
  CHECK(pos_from_tag("JJR") == Pos::adjective);
  CHECK(pos_from_tag("s") == Pos::adjective);
  CHECK(pos_from_tag("RB") == Pos::adverb);
  CHECK(pos_from_tag("DT") == Pos::other);
  CHECK(pos_from_tag(".") == Pos::other);
  CHECK_FALSE(pos_from_tag("QQ").has_value());
  CHECK(pos_letter(Pos::adjective) == 'a');
  CHECK(pos_number(Pos::adverb) == 4);
}

TEST_CASE("toy lexicon senses are ordered by sense number") {
  const Lexicon& lex = toy_lexicon();
  const auto& bass = lex.senses_of("bass", Pos::noun);
  REQUIRE(bass.size() == 3);
  CHECK(bass[0].synset == SynsetId{Pos::noun, 110});
  CHECK(bass[2].synset == SynsetId{Pos::noun, 112});
  CHECK(lex.sense_key(bass[1]) == "bass%n#2");
  CHECK(lex.senses_of("bass", Pos::verb).empty());
  CHECK(lex.senses_of("zebra", Pos::noun).empty());
  CHECK(lex.senses_of("deposit", Pos::verb).size() == 2);
  CHECK(lex.synset({Pos::noun, 104}).lemmas == std::vector<std::string>{"money", "cash"});
  CHECK(lex.synset({Pos::noun, 101}).examples.size() == 1);
  CHECK_THROWS_AS(lex.synset({Pos::noun, 999}), std::out_of_range);
}

TEST_CASE("related synsets follow the admitted relations per POS") {
  const Lexicon& lex = toy_lexicon();
  // Noun bank#1: hyponym savings_bank and meronym account; no hypernyms.
  const auto bank = lex.related_synsets(lex.synset({Pos::noun, 101}));
  REQUIRE(bank.size() == 2);
  CHECK(bank[0].second->id.offset == 103);
  CHECK(bank[1].second->id.offset == 132);
  CHECK(lex.related_synsets(lex.synset({Pos::noun, 103})).empty());
  // Verbs keep hypernyms.
  CHECK(lex.related_synsets(lex.synset({Pos::verb, 206})).size() == 1);
  CHECK(lex.related_synsets(lex.synset({Pos::adjective, 303})).size() == 1);
  CHECK(lex.related_synsets(lex.synset({Pos::adverb, 401})).size() == 1);
}

TEST_CASE("admitted relation table") {
  CHECK(is_admitted(Pos::noun, PointerKind::hyponym));
  CHECK(is_admitted(Pos::noun, PointerKind::meronym));
  CHECK_FALSE(is_admitted(Pos::noun, PointerKind::hypernym));
  CHECK(is_admitted(Pos::verb, PointerKind::hypernym));
  CHECK(is_admitted(Pos::verb, PointerKind::cause));
  CHECK_FALSE(is_admitted(Pos::verb, PointerKind::meronym));
  CHECK(is_admitted(Pos::adjective, PointerKind::see_also));
  CHECK_FALSE(is_admitted(Pos::adjective, PointerKind::hyponym));
  CHECK(is_admitted(Pos::adverb, PointerKind::domain_topic));
  CHECK_FALSE(is_admitted(Pos::adverb, PointerKind::similar_to));
  CHECK_FALSE(is_admitted(Pos::noun, PointerKind::other));
}

TEST_CASE("toy lexicon errors") {
  CHECK_THROWS_AS(toy("synset 1 n | a | g\nsynset 1 n | b | g\n"), ParseError);
  CHECK_THROWS_AS(toy("synset 1 n | a | g\nptr 1 hyponym 2\n"), ParseError);
  CHECK_THROWS_AS(toy("synset 1 n | a | g\nsynset 2 n | b | g\nptr 1 sibling 2\n"), ParseError);
  CHECK_THROWS_AS(toy("synset 1 n | a | g\nsense a n 1 1\nsense a n 1 1\n"), ParseError);
  CHECK_THROWS_AS(toy("synset 1 n | a | g\nsense a n 2 1\n"), ParseError);
  CHECK_THROWS_AS(toy("synset 1 n | a | g\nsense a v 1 1\n"), ParseError);
  CHECK_THROWS_AS(toy("synset 1 q | a | g\n"), ParseError);
  CHECK_THROWS_AS(toy("synset 1 n | a\n"), ParseError);
  CHECK_THROWS_AS(toy("bogus line\n"), ParseError);
  CHECK_THROWS_WITH(toy("synset 1 n | a | g\n\nsense a n 1 7\n"), "<toy>:3: undeclared synset id 7");
}

TEST_CASE("toy lexicon accepts full POS names and forward references") {
  const Lexicon lex = toy(
      "sense walk verb 1 5\n"
      "ptr 5 hypernym 6\n"
      "synset 5 verb | walk | move on foot | walk home\n"
      "synset 6 verb | move | change place\n");
  CHECK(lex.senses_of("walk", Pos::verb).size() == 1);
  CHECK(lex.related_synsets(lex.synset({Pos::verb, 5})).size() == 1);
}

TEST_CASE("gloss splitting separates definition and quoted examples") {
  auto [def, ex] = split_gloss(R"(a financial institution; "he cashed a check"; "that bank holds it"  )");
  CHECK(def == "a financial institution");
  REQUIRE(ex.size() == 2);
  CHECK(ex[0] == "he cashed a check");
  CHECK(ex[1] == "that bank holds it");
  auto [def2, ex2] = split_gloss("no examples here");
  CHECK(def2 == "no examples here");
  CHECK(ex2.empty());
  auto [def3, ex3] = split_gloss(R"(broken; "unterminated example)");
  CHECK(def3 == "broken");
  CHECK(ex3 == std::vector<std::string>{"unterminated example"});
}

TEST_CASE("WordNet dictionary files load with sense order and pointers") {
  const Lexicon lex = load_lexicon(WSD_TEST_DATA_DIR "/wordnet");
  CHECK(lex.key_style() == SenseKeyStyle::wordnet);
  CHECK(lex.synset_count() == 10);
  CHECK(lex.dangling_pointers() == 2);

  const auto& bank = lex.senses_of("bank", Pos::noun);
  REQUIRE(bank.size() == 2);
  CHECK(bank[0].synset == SynsetId{Pos::noun, 8420278});
  CHECK(bank[1].sense_number == 2);
  CHECK(lex.sense_key(bank[1]) == "bank%1:09213565");

  const Synset& s = lex.synset(bank[0].synset);
  CHECK(s.lemmas == std::vector<std::string>{"depository_financial_institution", "bank"});
  CHECK(s.gloss == "a financial institution that accepts deposits and channels the money into lending activities");
  CHECK(s.examples.size() == 2);
  const auto related = lex.related_synsets(s);
  REQUIRE(related.size() == 1);
  CHECK(related[0].second->lemmas[0] == "savings_bank");

  CHECK(lex.synset({Pos::adjective, 1386883}).lemmas[0] == "low");
  CHECK(lex.senses_of("dilatory", Pos::adjective).size() == 1);
  CHECK(lex.related_synsets(lex.synset({Pos::adverb, 12779})).size() == 1);
  CHECK(lex.senses_of("bank", Pos::verb).size() == 1);
  CHECK_THROWS_AS(load_lexicon(WSD_TEST_DATA_DIR "/no_such_dir/"), LoadError);
}

TEST_CASE("stopwords and content stems") {
  const StopwordSet smart = StopwordSet::smart();
  CHECK(smart.size() == 570);
  CHECK(smart.contains("the"));
  CHECK(smart.contains("value"));
  CHECK_FALSE(smart.contains("river"));
  CHECK(content_stems("The Rivers are flowing into the sea", smart) ==
        std::vector<std::string>{"river", "flow", "sea"});
  std::istringstream in("# custom\nriver\n\nSEA\n");
  const StopwordSet custom = StopwordSet::parse(in);
  CHECK(custom.size() == 2);
  CHECK(custom.contains("sea"));
}

TEST_CASE("tokenizer keeps internal apostrophes and splits underscores") {
  CHECK(tokenize_words("Don't stop_me, 'now' o'") == std::vector<std::string>{"don't", "stop", "me", "now", "o"});
}

TEST_CASE("disambiguation vocabulary lists own texts before related ones") {
  const Lexicon& lex = toy_lexicon();
  const auto v = build_disamb_vocabulary(lex, lex.synset({Pos::noun, 101}), StopwordSet::smart());
  CHECK(v.own_count == 3);
  REQUIRE(v.sequences.size() == 3 + 2 + 3);
  CHECK(v.sequences[0] == std::vector<std::string>{"bank", "depositori"});
  CHECK(v.sequences[1] == std::vector<std::string>{"financi", "institut", "accept", "monei", "deposit", "lend", "monei"});
  CHECK(v.word_set.contains("savings"));
  CHECK(v.word_set.contains("withdrawals"));
  CHECK_FALSE(v.word_set.contains("the"));
}
