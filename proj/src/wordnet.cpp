#include <array>
#include <charconv>
#include <fstream>

#include "wsd/error.hpp"
#include "wsd/lexicon.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace {

constexpr std::array<std::pair<std::string_view, Pos>, 4> kFiles = {{
    {"noun", Pos::noun},
    {"verb", Pos::verb},
    {"adj", Pos::adjective},
    {"adv", Pos::adverb},
}};

class LineError {
 public:
  LineError(const std::filesystem::path& file, std::size_t line) : file_(file), line_(line) {}

  [[noreturn]] void operator()(const std::string& msg) const {
    throw ParseError(file_.string() + ":" + std::to_string(line_) + ": " + msg);
  }

 private:
  const std::filesystem::path& file_;
  std::size_t line_;
};

template <typename T>
T parse_number(std::string_view text, int base, const LineError& fail) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail("bad number '" + std::string(text) + "'");
  }
  return value;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open WordNet file " + path.string());
  return in;
}

// Adjective lemmas may carry a syntactic marker: "galore(ip)".
std::string_view strip_marker(std::string_view word) {
  if (!word.empty() && word.back() == ')') {
    const std::size_t open = word.rfind('(');
    if (open != std::string_view::npos && open > 0) return word.substr(0, open);
  }
  return word;
}

Pos pointer_pos(std::string_view letter, const LineError& fail) {
  if (letter.size() == 1) {
    if (auto p = pos_from_letter(letter[0])) return *p;
  }
  fail("bad pointer part of speech '" + std::string(letter) + "'");
}

void read_data_file(const std::filesystem::path& path, Pos file_pos, LexiconBuilder& builder) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == ' ') continue;  // license header
    const LineError fail(path, line_no);

    const std::size_t bar = line.find(" | ");
    const std::string_view fields_part =
        bar == std::string::npos ? std::string_view(line) : std::string_view(line).substr(0, bar);
    const auto f = split_ws(fields_part);
    if (f.size() < 4) fail("truncated synset record");

    Synset s;
    s.id = {file_pos, parse_number<std::uint32_t>(f[0], 10, fail)};
    if (s.id.offset >= (1u << 30)) fail("offset out of range");
    std::size_t at = 3;
    const auto word_count = parse_number<unsigned>(f[at++], 16, fail);
    if (word_count == 0 || f.size() < at + 2 * word_count + 1) fail("truncated word list");
    for (unsigned w = 0; w < word_count; ++w) {
      s.lemmas.emplace_back(strip_marker(f[at]));
      at += 2;  // word, lex_id
    }
    const auto pointer_count = parse_number<unsigned>(f[at++], 10, fail);
    if (f.size() < at + 4 * pointer_count) fail("truncated pointer list");
    for (unsigned p = 0; p < pointer_count; ++p) {
      const PointerKind kind = pointer_kind_from_symbol(f[at]);
      const auto target_offset = parse_number<std::uint32_t>(f[at + 1], 10, fail);
      const Pos target_pos = pointer_pos(f[at + 2], fail);
      s.pointers.push_back({kind, {target_pos, target_offset}});
      at += 4;
    }
    // Verb frames follow; they carry nothing the lexicon uses.
    if (bar != std::string::npos) {
      auto [definition, examples] = split_gloss(std::string_view(line).substr(bar + 3));
      s.gloss = std::move(definition);
      s.examples = std::move(examples);
    }
    if (!builder.add_synset(std::move(s))) fail("duplicate synset offset");
  }
}

void read_index_file(const std::filesystem::path& path, Pos file_pos, LexiconBuilder& builder) {
  std::ifstream in = open_or_throw(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == ' ') continue;
    const LineError fail(path, line_no);
    const auto f = split_ws(line);
    if (f.size() < 6) fail("truncated index record");
    const auto synset_count = parse_number<unsigned>(f[2], 10, fail);
    const auto pointer_count = parse_number<unsigned>(f[3], 10, fail);
    const std::size_t first_offset = 4 + pointer_count + 2;
    if (f.size() != first_offset + synset_count) fail("offset count does not match synset_cnt");
    for (std::size_t i = first_offset; i < f.size(); ++i) {
      const SynsetId id{file_pos, parse_number<std::uint32_t>(f[i], 10, fail)};
      if (!builder.has_synset(id)) fail("index refers to missing synset " + to_string(id));
      builder.append_sense(std::string(f[0]), file_pos, id);
    }
  }
}

}  // namespace

std::pair<std::string, std::vector<std::string>> split_gloss(std::string_view gloss) {
  gloss = trim(gloss);
  std::vector<std::string> examples;
  const std::size_t first_quote = gloss.find('"');
  std::string_view definition = gloss.substr(0, first_quote);
  std::size_t at = first_quote;
  while (at != std::string_view::npos) {
    const std::size_t close = gloss.find('"', at + 1);
    if (close == std::string_view::npos) {
      examples.emplace_back(trim(gloss.substr(at + 1)));
      break;
    }
    examples.emplace_back(gloss.substr(at + 1, close - at - 1));
    at = gloss.find('"', close + 1);
  }
  definition = trim(definition);
  while (!definition.empty() && definition.back() == ';') {
    definition.remove_suffix(1);
    definition = trim(definition);
  }
  return {std::string(definition), std::move(examples)};
}

Lexicon parse_wordnet(const std::filesystem::path& dir) {
  LexiconBuilder builder(SenseKeyStyle::wordnet);
  for (const auto& [suffix, pos] : kFiles) {
    read_data_file(dir / ("data." + std::string(suffix)), pos, builder);
  }
  for (const auto& [suffix, pos] : kFiles) {
    read_index_file(dir / ("index." + std::string(suffix)), pos, builder);
  }
  return std::move(builder).build(LexiconBuilder::Dangling::drop);
}

}  // namespace wsd
