#include "wsd/vectors.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

bool VectorStore::add(std::string word, std::span<const float> values) {
  if (values.size() != dimension_) {
    throw std::invalid_argument("vector for '" + word + "' has dimension " +
                                std::to_string(values.size()) + ", expected " +
                                std::to_string(dimension_));
  }
  const std::size_t slot = index_.size();
  if (!index_.emplace(std::move(word), slot).second) return false;
  data_.insert(data_.end(), values.begin(), values.end());
  return true;
}

std::optional<std::span<const float>> VectorStore::lookup(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) it = index_.find(to_lower(word));
  if (it == index_.end()) return std::nullopt;
  return std::span<const float>(data_).subspan(it->second * dimension_, dimension_);
}

namespace {

struct Header {
  std::size_t count = 0;
  std::size_t dimension = 0;
};

Header parse_header(const std::string& line, std::string_view source) {
  const auto f = split_ws(line);
  Header h;
  const auto number = [&](std::string_view text, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
  };
  if (f.size() != 2 || !number(f[0], h.count) || !number(f[1], h.dimension) || h.dimension == 0) {
    throw LoadError(std::string(source) + ":1: bad header '" + line + "'");
  }
  return h;
}

VectorStore read_binary(std::istream& in, std::string_view source) {
  std::string header_line;
  if (!std::getline(in, header_line)) throw LoadError(std::string(source) + ": missing header");
  const Header h = parse_header(header_line, source);
  std::size_t offset = header_line.size() + 1;
  const auto where = [&] { return std::string(source) + ": byte " + std::to_string(offset); };

  VectorStore store(h.dimension);
  std::vector<float> values(h.dimension);
  std::vector<unsigned char> raw(4 * h.dimension);
  for (std::size_t entry = 0; entry < h.count; ++entry) {
    std::string word;
    int ch = 0;
    while ((ch = in.get()) != EOF) {
      ++offset;
      if (ch == ' ') break;
      if (ch == '\n' && word.empty()) continue;
      word.push_back(static_cast<char>(ch));
    }
    if (ch == EOF) throw LoadError(where() + ": truncated at entry " + std::to_string(entry));
    if (word.empty()) throw LoadError(where() + ": empty word at entry " + std::to_string(entry));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
      throw LoadError(where() + ": truncated vector for '" + word + "'");
    }
    offset += raw.size();
    for (std::size_t d = 0; d < h.dimension; ++d) {
      const unsigned char* b = &raw[4 * d];
      const std::uint32_t bits = static_cast<std::uint32_t>(b[0]) |
                                 (static_cast<std::uint32_t>(b[1]) << 8) |
                                 (static_cast<std::uint32_t>(b[2]) << 16) |
                                 (static_cast<std::uint32_t>(b[3]) << 24);
      values[d] = std::bit_cast<float>(bits);
    }
    store.add(std::move(word), values);
  }
  return store;
}

VectorStore read_text(std::istream& in, std::string_view source) {
  std::string line;
  if (!std::getline(in, line)) throw LoadError(std::string(source) + ": missing header");
  const Header h = parse_header(line, source);
  VectorStore store(h.dimension);
  std::vector<float> values(h.dimension);
  std::size_t line_no = 1;
  std::size_t entries = 0;
  while (entries < h.count && std::getline(in, line)) {
    ++line_no;
    const auto where = [&] { return std::string(source) + ":" + std::to_string(line_no); };
    const auto f = split_ws(line);
    if (f.empty()) continue;
    if (f.size() != h.dimension + 1) {
      throw LoadError(where() + ": expected " + std::to_string(h.dimension + 1) + " fields, got " +
                      std::to_string(f.size()));
    }
    for (std::size_t d = 0; d < h.dimension; ++d) {
      const std::string_view t = f[d + 1];
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), values[d]);
      if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw LoadError(where() + ": bad number '" + std::string(t) + "'");
      }
    }
    store.add(std::string(f[0]), values);
    ++entries;
  }
  if (entries < h.count) {
    throw LoadError(std::string(source) + ": truncated, header declares " + std::to_string(h.count) +
                    " entries but found " + std::to_string(entries));
  }
  return store;
}

}  // namespace

VectorStore read_vectors(std::istream& in, VectorFormat format, std::string_view source) {
  return format == VectorFormat::binary ? read_binary(in, source) : read_text(in, source);
}

VectorStore load_vectors(const std::filesystem::path& path, VectorFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open vector file " + path.string());
  return read_vectors(in, format, path.string());
}

}  // namespace wsd
