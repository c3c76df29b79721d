#include "wsd/pos.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <utility>

namespace wsd {

namespace {

using Entry = std::pair<std::string_view, Pos>;

// Upper-cased tag -> class. Penn Treebank, Universal Dependencies and the
// WordNet letters. Anything absent is rejected by the corpus readers.
constexpr std::array kTagTable = {
    Entry{"N", Pos::noun},       Entry{"NN", Pos::noun},
    Entry{"NNS", Pos::noun},     Entry{"NNP", Pos::noun},
    Entry{"NNPS", Pos::noun},    Entry{"NOUN", Pos::noun},
    Entry{"PROPN", Pos::noun},   Entry{"V", Pos::verb},
    Entry{"VB", Pos::verb},      Entry{"VBD", Pos::verb},
    Entry{"VBG", Pos::verb},     Entry{"VBN", Pos::verb},
    Entry{"VBP", Pos::verb},     Entry{"VBZ", Pos::verb},
    Entry{"VERB", Pos::verb},    Entry{"A", Pos::adjective},
    Entry{"S", Pos::adjective},  Entry{"J", Pos::adjective},
    Entry{"JJ", Pos::adjective}, Entry{"JJR", Pos::adjective},
    Entry{"JJS", Pos::adjective}, Entry{"ADJ", Pos::adjective},
    Entry{"R", Pos::adverb},     Entry{"RB", Pos::adverb},
    Entry{"RBR", Pos::adverb},   Entry{"RBS", Pos::adverb},
    Entry{"RP", Pos::adverb},    Entry{"ADV", Pos::adverb},
    // Penn function tags
    Entry{"CC", Pos::other},     Entry{"CD", Pos::other},
    Entry{"DT", Pos::other},     Entry{"EX", Pos::other},
    Entry{"FW", Pos::other},     Entry{"IN", Pos::other},
    Entry{"LS", Pos::other},     Entry{"MD", Pos::other},
    Entry{"PDT", Pos::other},    Entry{"POS", Pos::other},
    Entry{"PRP", Pos::other},    Entry{"PRP$", Pos::other},
    Entry{"SYM", Pos::other},    Entry{"TO", Pos::other},
    Entry{"UH", Pos::other},     Entry{"WDT", Pos::other},
    Entry{"WP", Pos::other},     Entry{"WP$", Pos::other},
    Entry{"WRB", Pos::other},    Entry{"HYPH", Pos::other},
    Entry{"NFP", Pos::other},    Entry{"ADD", Pos::other},
    Entry{"AFX", Pos::other},    Entry{"GW", Pos::other},
    Entry{"XX", Pos::other},     Entry{"-NONE-", Pos::other},
    Entry{"-LRB-", Pos::other},  Entry{"-RRB-", Pos::other},
    Entry{"#", Pos::other},      Entry{"$", Pos::other},
    Entry{"''", Pos::other},     Entry{"``", Pos::other},
    Entry{"(", Pos::other},      Entry{")", Pos::other},
    Entry{",", Pos::other},      Entry{".", Pos::other},
    Entry{":", Pos::other},
    // Universal function tags
    Entry{"ADP", Pos::other},    Entry{"AUX", Pos::other},
    Entry{"CCONJ", Pos::other},  Entry{"CONJ", Pos::other},
    Entry{"DET", Pos::other},    Entry{"INTJ", Pos::other},
    Entry{"NUM", Pos::other},    Entry{"PART", Pos::other},
    Entry{"PRON", Pos::other},   Entry{"PRT", Pos::other},
    Entry{"PUNCT", Pos::other},  Entry{"SCONJ", Pos::other},
    Entry{"X", Pos::other},
};

}  // namespace

std::optional<Pos> pos_from_tag(std::string_view tag) {
  std::string upper(tag);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& [name, pos] : kTagTable) {
    if (name == upper) return pos;
  }
  return std::nullopt;
}

char pos_letter(Pos p) {
  switch (p) {
    case Pos::noun: return 'n';
    case Pos::verb: return 'v';
    case Pos::adjective: return 'a';
    case Pos::adverb: return 'r';
    case Pos::other: break;
  }
  return 'x';
}

std::optional<Pos> pos_from_letter(char c) {
  switch (c) {
    case 'n': return Pos::noun;
    case 'v': return Pos::verb;
    case 'a':
    case 's': return Pos::adjective;
    case 'r': return Pos::adverb;
    default: return std::nullopt;
  }
}

int pos_number(Pos p) {
  switch (p) {
    case Pos::noun: return 1;
    case Pos::verb: return 2;
    case Pos::adjective: return 3;
    case Pos::adverb: return 4;
    case Pos::other: break;
  }
  return 0;
}

std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::adjective: return "adjective";
    case Pos::adverb: return "adverb";
    case Pos::other: break;
  }
  return "other";
}

}  // namespace wsd
