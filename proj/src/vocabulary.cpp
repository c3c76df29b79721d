#include "wsd/vocabulary.hpp"

#include <fstream>
#include <istream>

#include "wsd/error.hpp"
#include "wsd/porter.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace detail {
extern const std::string_view kSmartStopwords;
}

StopwordSet::StopwordSet(const std::vector<std::string>& words) {
  for (const auto& w : words) words_.insert(to_lower(w));
}

StopwordSet StopwordSet::parse(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    words.emplace_back(body);
  }
  return StopwordSet(words);
}

StopwordSet StopwordSet::smart() {
  std::vector<std::string> words;
  for (std::string_view w : split(detail::kSmartStopwords, '\n')) {
    w = trim(w);
    if (!w.empty()) words.emplace_back(w);
  }
  return StopwordSet(words);
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open stopword file " + path.string());
  return parse(in);
}

namespace {

void add_source(std::string_view text, const StopwordSet& stopwords, DisambVocabulary& vocab) {
  std::vector<std::string> stems;
  for (std::string& word : tokenize_words(text)) {
    if (stopwords.contains(word)) continue;
    stems.push_back(porter_stem(word));
    vocab.word_set.insert(std::move(word));
  }
  if (!stems.empty()) vocab.sequences.push_back(std::move(stems));
}

void add_synset_sources(const Synset& s, const StopwordSet& stopwords, DisambVocabulary& vocab) {
  std::string lemma_text;
  for (const auto& lemma : s.lemmas) {
    if (!lemma_text.empty()) lemma_text.push_back(' ');
    lemma_text += lemma;
  }
  add_source(lemma_text, stopwords, vocab);
  add_source(s.gloss, stopwords, vocab);
  for (const auto& example : s.examples) add_source(example, stopwords, vocab);
}

}  // namespace

std::vector<std::string> content_stems(std::string_view text, const StopwordSet& stopwords) {
  std::vector<std::string> stems;
  for (const std::string& word : tokenize_words(text)) {
    if (!stopwords.contains(word)) stems.push_back(porter_stem(word));
  }
  return stems;
}

DisambVocabulary build_disamb_vocabulary(const Lexicon& lex, const Synset& s,
                                         const StopwordSet& stopwords) {
  DisambVocabulary vocab;
  add_synset_sources(s, stopwords, vocab);
  vocab.own_count = vocab.sequences.size();
  for (const auto& [kind, related] : lex.related_synsets(s)) {
    add_synset_sources(*related, stopwords, vocab);
  }
  return vocab;
}

}  // namespace wsd
