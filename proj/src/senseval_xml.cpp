#include <istream>
#include <iterator>
#include <map>
#include <set>

#include "wsd/corpus.hpp"
#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace {

// Minimal tag scanner over the whole file. Only the elements carrying word
// annotations are interpreted; everything else is skipped.
class XmlReader {
 public:
  XmlReader(std::string text, std::string_view source) : text_(std::move(text)), source_(source) {}

  std::vector<Document> read() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '<') {
        handle_markup();
      } else {
        const std::size_t next = text_.find('<', pos_);
        const std::size_t end = next == std::string::npos ? text_.size() : next;
        add_plain_text(std::string_view(text_).substr(pos_, end - pos_));
        advance_to(end);
      }
    }
    if (current_) fail("unterminated <text> element");
    return std::move(docs_);
  }

 private:
  struct Tag {
    std::string name;
    std::map<std::string, std::string> attrs;
    bool closing = false;
    bool self_closing = false;
  };

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(std::string(source_) + ":" + std::to_string(line_) + ": " + msg);
  }

  void advance_to(std::size_t end) {
    for (; pos_ < end; ++pos_) {
      if (text_[pos_] == '\n') ++line_;
    }
  }

  static std::string decode(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '&') {
        out.push_back(s[i]);
        continue;
      }
      const std::size_t semi = s.find(';', i);
      if (semi == std::string_view::npos) {
        out.push_back('&');
        continue;
      }
      const std::string_view ent = s.substr(i + 1, semi - i - 1);
      if (ent == "amp") out.push_back('&');
      else if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (!ent.empty() && ent[0] == '#') {
        const bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
        const long code = std::strtol(std::string(ent.substr(hex ? 2 : 1)).c_str(), nullptr, hex ? 16 : 10);
        if (code > 0 && code < 0x80) out.push_back(static_cast<char>(code));
        else out.push_back('?');
      } else {
        out.append(s.substr(i, semi - i + 1));
      }
      i = semi;
    }
    return out;
  }

  void handle_markup() {
    if (text_.compare(pos_, 4, "<!--") == 0) {
      const std::size_t end = text_.find("-->", pos_);
      if (end == std::string::npos) fail("unterminated comment");
      advance_to(end + 3);
      return;
    }
    const std::size_t close = text_.find('>', pos_);
    if (close == std::string::npos) fail("unterminated tag");
    const std::string_view raw = std::string_view(text_).substr(pos_ + 1, close - pos_ - 1);
    const Tag tag = parse_tag(raw);
    advance_to(close + 1);

    if (tag.name == "text") {
      if (tag.closing) {
        if (!current_) fail("</text> without <text>");
        docs_.push_back(std::move(*current_));
        current_.reset();
      } else if (!tag.self_closing) {
        if (current_) fail("nested <text> element");
        open_text(tag);
      }
      return;
    }
    if (!tag.closing && !tag.self_closing &&
        (tag.name == "instance" || tag.name == "wf" || tag.name == "head")) {
      read_word_element(tag);
    }
  }

  Tag parse_tag(std::string_view raw) const {
    Tag tag;
    if (!raw.empty() && (raw[0] == '?' || raw[0] == '!')) {
      tag.self_closing = true;
      return tag;
    }
    if (!raw.empty() && raw[0] == '/') {
      tag.closing = true;
      raw.remove_prefix(1);
    }
    if (!raw.empty() && raw.back() == '/') {
      tag.self_closing = true;
      raw.remove_suffix(1);
    }
    std::size_t i = 0;
    while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    tag.name = to_lower(raw.substr(0, i));
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      const std::size_t eq = raw.find('=', i);
      if (eq == std::string_view::npos) fail("malformed attribute in <" + tag.name + ">");
      const std::string name = to_lower(trim(raw.substr(i, eq - i)));
      std::size_t v = eq + 1;
      while (v < raw.size() && std::isspace(static_cast<unsigned char>(raw[v]))) ++v;
      if (v >= raw.size()) fail("missing attribute value in <" + tag.name + ">");
      std::string value;
      if (raw[v] == '"' || raw[v] == '\'') {
        const std::size_t end = raw.find(raw[v], v + 1);
        if (end == std::string_view::npos) fail("unterminated attribute in <" + tag.name + ">");
        value = decode(raw.substr(v + 1, end - v - 1));
        i = end + 1;
      } else {
        std::size_t end = v;
        while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
        value = decode(raw.substr(v, end - v));
        i = end;
      }
      tag.attrs[name] = std::move(value);
    }
    return tag;
  }

  void open_text(const Tag& tag) {
    current_.emplace();
    auto it = tag.attrs.find("id");
    current_->id = it != tag.attrs.end() ? it->second : "d" + std::to_string(docs_.size() + 1);
    for (const auto& d : docs_) {
      if (d.id == current_->id) fail("duplicate document id '" + current_->id + "'");
    }
    instance_ids_.clear();
  }

  void add_plain_text(std::string_view chunk) {
    if (!current_) return;
    for (std::string_view word : split_ws(decode(chunk))) {
      Token t;
      t.surface = std::string(word);
      current_->tokens.push_back(std::move(t));
    }
  }

  void read_word_element(const Tag& tag) {
    const std::string closing = "</" + tag.name;
    const std::size_t start_line = line_;
    std::size_t end = pos_;
    // The element body may not contain further markup we care about, so the
    // first matching close tag ends it (case-insensitively).
    while (true) {
      end = text_.find("</", end);
      if (end == std::string::npos) {
        line_ = start_line;
        fail("unterminated <" + tag.name + "> element");
      }
      const std::size_t name_end = text_.find('>', end);
      if (name_end == std::string::npos) fail("unterminated tag");
      if (to_lower(trim(std::string_view(text_).substr(end + 2, name_end - end - 2))) == tag.name) break;
      end = name_end;
    }
    std::string body = decode(std::string_view(text_).substr(pos_, end - pos_));
    advance_to(text_.find('>', end) + 1);
    if (!current_) return;

    // Strip any nested markup, then join multiword surfaces with '_'.
    std::string surface;
    bool in_tag = false;
    for (char c : body) {
      if (c == '<') in_tag = true;
      else if (c == '>') in_tag = false;
      else if (!in_tag) surface.push_back(c);
    }
    const auto words = split_ws(surface);
    Token t;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) t.surface.push_back('_');
      t.surface.append(words[i]);
    }
    if (t.surface.empty()) t.surface = "_";

    auto attr = [&](const char* name) -> const std::string* {
      auto it = tag.attrs.find(name);
      return it == tag.attrs.end() ? nullptr : &it->second;
    };
    if (const std::string* lemma = attr("lemma")) t.lemma = to_lower(*lemma);
    if (const std::string* pos = attr("pos")) {
      const auto mapped = pos_from_tag(*pos);
      if (!mapped) {
        line_ = start_line;
        fail("unknown POS tag '" + *pos + "' in <" + tag.name + ">");
      }
      t.pos = t.lemma.empty() ? Pos::other : *mapped;
    }
    if (tag.name != "wf") {
      if (const std::string* id = attr("id")) {
        if (!instance_ids_.insert(*id).second) fail("duplicate instance id '" + *id + "'");
        t.instance_id = *id;
      }
    }
    current_->tokens.push_back(std::move(t));
  }

  std::string text_;
  std::string_view source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::vector<Document> docs_;
  std::optional<Document> current_;
  std::set<std::string> instance_ids_;
};

}  // namespace

std::vector<Document> parse_senseval_xml(std::istream& in, std::string_view source) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return XmlReader(std::move(text), source).read();
}

}  // namespace wsd
