#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "wsd/lexicon.hpp"

namespace wsd {

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(const std::vector<std::string>& words);

  /// The SMART English list compiled into the library: 571 entries, 570
  /// distinct words ("would" appears twice).
  static StopwordSet smart();
  /// One word per line; blank lines and `#` comments ignored.
  static StopwordSet load(const std::filesystem::path& path);
  static StopwordSet parse(std::istream& in);

  bool contains(std::string_view word) const { return words_.contains(std::string(word)); }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Feature basis for both relatedness measures. `sequences` holds one stem
/// sequence per non-empty source text; the first `own_count` come from the
/// synset itself (lemmas, gloss, examples), the rest from admitted relations.
struct DisambVocabulary {
  std::vector<std::vector<std::string>> sequences;
  std::size_t own_count = 0;
  std::set<std::string> word_set;  // raw lowercased content words
};

/// Tokenizes, drops stopwords and stems, preserving order.
std::vector<std::string> content_stems(std::string_view text, const StopwordSet& stopwords);

DisambVocabulary build_disamb_vocabulary(const Lexicon& lex, const Synset& s,
                                         const StopwordSet& stopwords);

}  // namespace wsd
