#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace wsd {

enum class Pos : std::uint8_t { noun, verb, adjective, adverb, other };

inline constexpr bool is_content(Pos p) { return p != Pos::other; }

// Maps a corpus POS tag (Penn Treebank, Universal, or WordNet letter) onto
// the four content classes. Returns nullopt for tags outside the fixed table.
std::optional<Pos> pos_from_tag(std::string_view tag);

// WordNet single-letter form: n, v, a, r ("x" for other).
char pos_letter(Pos p);
std::optional<Pos> pos_from_letter(char c);

// WordNet lexicographer numbering used in sense keys: 1 noun ... 4 adverb.
int pos_number(Pos p);

std::string_view pos_name(Pos p);

}  // namespace wsd
