#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsd/pos.hpp"

namespace wsd {

/// Identifies one synset. For WordNet lexicons `offset` is the byte offset
/// into the data file; toy lexicons use their declared integer ids.
struct SynsetId {
  Pos pos = Pos::noun;
  std::uint32_t offset = 0;

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

// Dense 32-bit packing: two bits of POS, thirty bits of offset.
std::uint32_t pack(SynsetId id);

struct SynsetIdHash {
  std::size_t operator()(SynsetId id) const noexcept {
    return std::hash<std::uint32_t>{}(pack(id));
  }
};

std::string to_string(SynsetId id);

enum class PointerKind : std::uint8_t {
  hypernym,
  hyponym,
  meronym,
  holonym,
  similar_to,
  antonym,
  attribute,
  pertainym,
  see_also,
  entailment,
  cause,
  domain_topic,
  derivationally_related,
  other,
};

// WordNet pointer symbol (`@`, `~`, `%m`, `;c`, ...) to kind. Symbols outside
// the consumed table map to PointerKind::other.
PointerKind pointer_kind_from_symbol(std::string_view symbol);
std::optional<PointerKind> pointer_kind_from_name(std::string_view name);
std::string_view pointer_kind_name(PointerKind kind);

/// Relations expanded into the disambiguation vocabulary for a synset of the
/// given POS: nouns take hyponyms and meronyms; adjectives similar-to,
/// antonym, attribute, pertainym and see-also; verbs troponyms (the WordNet
/// hyponym pointer), hypernyms, entailments and causes; adverbs antonyms,
/// pertainyms and domain topics.
bool is_admitted(Pos pos, PointerKind kind);

struct Pointer {
  PointerKind kind = PointerKind::other;
  SynsetId target;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;
  std::string gloss;
  std::vector<std::string> examples;
  std::vector<Pointer> pointers;
};

struct SenseEntry {
  std::string lemma;
  Pos pos = Pos::noun;
  int sense_number = 0;  // 1 = most frequent
  SynsetId synset;
};

enum class SenseKeyStyle { toy, wordnet };

class LexiconBuilder;

/// Immutable sense inventory. Concurrent reads are safe.
class Lexicon {
 public:
  Lexicon() = default;

  /// Senses ordered by sense number; empty when the pair is unknown.
  const std::vector<SenseEntry>& senses_of(std::string_view lemma, Pos pos) const;

  const Synset* find(SynsetId id) const;
  /// Throws std::out_of_range for ids outside the lexicon.
  const Synset& synset(SynsetId id) const;

  /// Pointer targets admitted for the synset's POS, in pointer order.
  /// Dangling targets are skipped.
  std::vector<std::pair<PointerKind, const Synset*>> related_synsets(const Synset& s) const;

  /// `lemma%n#2` for toy lexicons, `lemma%1:00012345` for WordNet.
  std::string sense_key(const SenseEntry& entry) const;

  SenseKeyStyle key_style() const { return key_style_; }
  std::size_t synset_count() const { return synsets_.size(); }
  std::size_t lemma_count() const;
  /// Pointers whose target was absent at build time (dropped).
  std::size_t dangling_pointers() const { return dangling_pointers_; }

  /// All synset ids in ascending order.
  std::vector<SynsetId> synset_ids() const;
  /// All (lemma, pos) pairs that have senses, sorted.
  std::vector<std::pair<std::string, Pos>> lemmas() const;

 private:
  friend class LexiconBuilder;

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  using SenseLists = std::array<std::vector<SenseEntry>, 4>;

  SenseKeyStyle key_style_ = SenseKeyStyle::toy;
  std::unordered_map<SynsetId, Synset, SynsetIdHash> synsets_;
  std::unordered_map<std::string, SenseLists, StringHash, std::equal_to<>> senses_;
  std::size_t dangling_pointers_ = 0;
};

/// Accumulates synsets, pointers and senses, then validates into a Lexicon.
class LexiconBuilder {
 public:
  explicit LexiconBuilder(SenseKeyStyle style) : style_(style) {}

  /// Returns false if the id is already present.
  bool add_synset(Synset s);
  bool has_synset(SynsetId id) const { return synsets_.contains(id); }
  /// Returns false if the synset is unknown.
  bool add_pointer(SynsetId source, PointerKind kind, SynsetId target);
  /// Appends the next sense number for (lemma, pos).
  void append_sense(std::string lemma, Pos pos, SynsetId synset);
  /// Explicit sense number. Returns false if that number is already taken.
  bool add_sense(std::string lemma, Pos pos, int sense_number, SynsetId synset);

  enum class Dangling { reject, drop };

  /// Throws ParseError when sense numbers have gaps, a sense references an
  /// unknown synset, or (with Dangling::reject) a pointer target is missing.
  Lexicon build(Dangling policy) &&;

 private:
  SenseKeyStyle style_;
  std::unordered_map<SynsetId, Synset, SynsetIdHash> synsets_;
  std::unordered_map<std::string, Lexicon::SenseLists> senses_;
};

/// Splits a WordNet gloss field into its definition and the double-quoted
/// usage examples: `a bank; "he cashed a check"` -> ("a bank", {"he cashed a check"}).
std::pair<std::string, std::vector<std::string>> split_gloss(std::string_view gloss);

/// Reads WordNet 3.x `index.*` and `data.*` files from a dictionary directory.
Lexicon parse_wordnet(const std::filesystem::path& dir);

/// Toy lexicon text format:
///   synset <id> <pos> | lemma1,lemma2 | gloss | example | example ...
///   ptr <src-id> <kind> <dst-id>
///   sense <lemma> <pos> <n> <synset-id>
/// `#` starts a comment line.
Lexicon load_toy_lexicon(const std::filesystem::path& path);
Lexicon parse_toy_lexicon(std::istream& in, std::string_view source = "<toy>");

/// Directories are read as WordNet, regular files as toy lexicons.
Lexicon load_lexicon(const std::filesystem::path& path);

}  // namespace wsd
