#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wsd {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split_ws(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::string to_lower(std::string_view s);

/// Lowercases and splits on every byte that is not an ASCII letter, digit,
/// non-ASCII byte, or an apostrophe flanked by word characters. Underscores
/// are separators, so multiword lemmas come apart.
std::vector<std::string> tokenize_words(std::string_view text);

}  // namespace wsd
