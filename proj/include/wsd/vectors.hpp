#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wsd {

/// Word -> fixed-dimension float vector, as produced by word2vec.
class VectorStore {
 public:
  explicit VectorStore(std::size_t dimension = 0) : dimension_(dimension) {}

  /// Returns false (and keeps the existing entry) for a repeated word.
  /// Throws std::invalid_argument on a dimension mismatch.
  bool add(std::string word, std::span<const float> values);

  /// Exact match first, then the lowercased form.
  std::optional<std::span<const float>> lookup(std::string_view word) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return index_.size(); }

 private:
  std::size_t dimension_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<float> data_;
};

enum class VectorFormat { binary, text };

/// Binary: "<count> <dim>\n" then per entry the word, one space and `dim`
/// little-endian IEEE-754 floats (an optional newline may precede a word).
/// Text: the same header, then "word v1 ... vdim" per line.
VectorStore load_vectors(const std::filesystem::path& path, VectorFormat format);
VectorStore read_vectors(std::istream& in, VectorFormat format, std::string_view source = "<vectors>");

}  // namespace wsd
