#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <unordered_map>

#include "wsd/error.hpp"
#include "wsd/lexicon.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace {

class ToyParser {
 public:
  explicit ToyParser(std::string_view source) : source_(source) {}

  Lexicon parse(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::string_view body = trim(line);
      if (body.empty() || body.front() == '#') continue;
      const auto words = split_ws(body);
      if (words[0] == "synset") {
        parse_synset(body);
      } else if (words[0] == "ptr") {
        pending_pointers_.push_back({line_no_, {words.begin(), words.end()}});
      } else if (words[0] == "sense") {
        pending_senses_.push_back({line_no_, {words.begin(), words.end()}});
      } else {
        fail("unknown record '" + std::string(words[0]) + "'");
      }
    }
    for (const auto& p : pending_pointers_) resolve_pointer(p);
    for (const auto& s : pending_senses_) resolve_sense(s);
    try {
      return std::move(builder_).build(LexiconBuilder::Dangling::reject);
    } catch (const ParseError& e) {
      throw ParseError(std::string(source_) + ": " + e.what());
    }
  }

 private:
  struct Pending {
    std::size_t line;
    std::vector<std::string> words;
  };

  [[noreturn]] void fail(const std::string& msg) const { fail_at(line_no_, msg); }
  [[noreturn]] void fail_at(std::size_t line, const std::string& msg) const {
    throw ParseError(std::string(source_) + ":" + std::to_string(line) + ": " + msg);
  }

  std::uint32_t parse_id(std::string_view text, std::size_t line) const {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value >= (1u << 30)) {
      fail_at(line, "bad synset id '" + std::string(text) + "'");
    }
    return value;
  }

  Pos parse_pos(std::string_view text, std::size_t line) const {
    if (text.size() == 1) {
      if (auto p = pos_from_letter(text[0])) return *p;
    }
    for (Pos p : {Pos::noun, Pos::verb, Pos::adjective, Pos::adverb}) {
      if (pos_name(p) == text) return p;
    }
    fail_at(line, "bad part of speech '" + std::string(text) + "'");
  }

  void parse_synset(std::string_view body) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = body.find('|', start);
      fields.push_back(trim(body.substr(start, bar - start)));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    if (fields.size() < 3) fail("synset record needs '| lemmas | gloss'");
    const auto head = split_ws(fields[0]);
    if (head.size() != 3) fail("expected 'synset <id> <pos>'");

    Synset s;
    s.id = {parse_pos(head[2], line_no_), parse_id(head[1], line_no_)};
    for (std::string_view lemma : split(fields[1], ',')) {
      lemma = trim(lemma);
      if (!lemma.empty()) s.lemmas.emplace_back(lemma);
    }
    if (s.lemmas.empty()) fail("synset without lemmas");
    s.gloss = std::string(fields[2]);
    for (std::size_t i = 3; i < fields.size(); ++i) {
      if (!fields[i].empty()) s.examples.emplace_back(fields[i]);
    }
    if (!ids_.emplace(s.id.offset, s.id).second) {
      fail("duplicate synset id " + std::to_string(s.id.offset));
    }
    builder_.add_synset(std::move(s));
  }

  SynsetId lookup(std::string_view text, std::size_t line) const {
    const std::uint32_t raw = parse_id(text, line);
    auto it = ids_.find(raw);
    if (it == ids_.end()) fail_at(line, "undeclared synset id " + std::to_string(raw));
    return it->second;
  }

  void resolve_pointer(const Pending& p) {
    if (p.words.size() != 4) fail_at(p.line, "expected 'ptr <src> <kind> <dst>'");
    const auto kind = pointer_kind_from_name(p.words[2]);
    if (!kind) fail_at(p.line, "unknown pointer kind '" + std::string(p.words[2]) + "'");
    builder_.add_pointer(lookup(p.words[1], p.line), *kind, lookup(p.words[3], p.line));
  }

  void resolve_sense(const Pending& s) {
    if (s.words.size() != 5) fail_at(s.line, "expected 'sense <lemma> <pos> <n> <id>'");
    const Pos pos = parse_pos(s.words[2], s.line);
    int number = 0;
    auto [ptr, ec] = std::from_chars(s.words[3].data(), s.words[3].data() + s.words[3].size(), number);
    if (ec != std::errc{} || ptr != s.words[3].data() + s.words[3].size() || number < 1) {
      fail_at(s.line, "bad sense number '" + std::string(s.words[3]) + "'");
    }
    const SynsetId id = lookup(s.words[4], s.line);
    if (id.pos != pos) fail_at(s.line, "sense POS differs from its synset's POS");
    if (!builder_.add_sense(to_lower(s.words[1]), pos, number, id)) {
      fail_at(s.line, "duplicate sense number " + std::to_string(number) + " for '" +
                          std::string(s.words[1]) + "'");
    }
  }

  std::string_view source_;
  std::size_t line_no_ = 0;
  LexiconBuilder builder_{SenseKeyStyle::toy};
  std::unordered_map<std::uint32_t, SynsetId> ids_;
  std::vector<Pending> pending_pointers_;
  std::vector<Pending> pending_senses_;
};

}  // namespace

Lexicon parse_toy_lexicon(std::istream& in, std::string_view source) {
  return ToyParser(source).parse(in);
}

Lexicon load_toy_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open lexicon file " + path.string());
  return parse_toy_lexicon(in, path.string());
}

}  // namespace wsd
