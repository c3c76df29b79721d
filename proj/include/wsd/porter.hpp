#pragma once

#include <string>
#include <string_view>

namespace wsd {

/// Porter (1980) suffix-stripping stemmer, matching the behaviour of Martin
/// Porter's reference implementation (including its `bli`/`logi` rules).
/// Words that are not entirely lowercase ASCII letters are returned as-is.
std::string porter_stem(std::string_view word);

}  // namespace wsd
