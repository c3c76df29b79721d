#pragma once

#include <stdexcept>
#include <string>

namespace wsd {

// Malformed input text: corpus files, key files, lexicon files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resource could not be opened or read (missing file, truncated binary).
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search space exceeded its configured guard. Never recovered from by
// pruning; callers report it.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsd
