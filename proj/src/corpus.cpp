#include "wsd/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "wsd/error.hpp"
#include "wsd/text.hpp"

namespace wsd {

namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw ParseError(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

std::string_view canonical_tag(Pos p) {
  switch (p) {
    case Pos::noun: return "NN";
    case Pos::verb: return "VB";
    case Pos::adjective: return "JJ";
    case Pos::adverb: return "RB";
    case Pos::other: break;
  }
  return "X";
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<Document> parse_canonical(std::istream& in, std::string_view source) {
  std::vector<Document> docs;
  std::set<std::string> doc_ids;
  std::set<std::string> instance_ids;
  bool in_block = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view body = trim(line);
    if (body.empty()) {
      in_block = false;
      continue;
    }
    const auto f = split_ws(body);
    if (f[0] == "#doc") {
      if (f.size() != 2) fail(source, line_no, "expected '#doc <id>'");
      if (!doc_ids.emplace(f[1]).second) fail(source, line_no, "duplicate document id '" + std::string(f[1]) + "'");
      docs.push_back({std::string(f[1]), {}});
      instance_ids.clear();
      in_block = true;
      continue;
    }
    if (!in_block) fail(source, line_no, "token line outside a '#doc' block");
    if (f.size() != 4) fail(source, line_no, "expected 4 fields, got " + std::to_string(f.size()));

    const auto pos = pos_from_tag(f[1]);
    if (!pos) fail(source, line_no, "unknown POS tag '" + std::string(f[1]) + "'");
    Token t;
    t.surface = std::string(f[0]);
    if (f[2] != "-") t.lemma = to_lower(f[2]);
    t.pos = t.lemma.empty() ? Pos::other : *pos;
    if (f[3] != "-") {
      if (!instance_ids.emplace(f[3]).second) {
        fail(source, line_no, "duplicate instance id '" + std::string(f[3]) + "'");
      }
      t.instance_id = std::string(f[3]);
    }
    docs.back().tokens.push_back(std::move(t));
  }
  return docs;
}

std::vector<Document> load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  std::ifstream in = open_or_throw(path);
  return format == CorpusFormat::canonical ? parse_canonical(in, path.string())
                                           : parse_senseval_xml(in, path.string());
}

Document load_document(const std::filesystem::path& path, CorpusFormat format) {
  auto docs = load_corpus(path, format);
  if (docs.empty()) return {};
  if (docs.size() > 1) {
    throw ParseError(path.string() + ": expected one document, found " + std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

std::string serialize_document(const Document& doc) {
  if (doc.id.empty() && doc.tokens.empty()) return {};
  std::ostringstream out;
  out << "#doc " << doc.id << '\n';
  for (const Token& t : doc.tokens) {
    out << t.surface << ' ' << canonical_tag(t.pos) << ' ' << (t.lemma.empty() ? "-" : t.lemma)
        << ' ' << t.instance_id.value_or("-") << '\n';
  }
  return out.str();
}

void write_canonical(std::ostream& out, std::span<const Document> docs) {
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i) out << '\n';
    out << serialize_document(docs[i]);
  }
}

AnswerKey parse_key(std::istream& in, std::string_view source) {
  AnswerKey key;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = split_ws(line);
    if (f.empty()) continue;
    if (f.size() < 3) fail(source, line_no, "expected '<doc> <instance> <sense-key>...'");
    auto& senses = key.entries[{std::string(f[0]), std::string(f[1])}];
    if (!senses.empty()) fail(source, line_no, "duplicate key entry");
    for (std::size_t i = 2; i < f.size(); ++i) senses.emplace_back(f[i]);
  }
  return key;
}

AnswerKey load_key(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  return parse_key(in, path.string());
}

Predictions parse_predictions(std::istream& in, std::string_view source) {
  Predictions out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = split_ws(line);
    if (f.empty()) continue;
    if (f.size() != 3) fail(source, line_no, "expected '<doc> <instance> <sense-key>'");
    if (!out.emplace(InstanceKey{std::string(f[0]), std::string(f[1])}, std::string(f[2])).second) {
      fail(source, line_no, "duplicate prediction");
    }
  }
  return out;
}

Predictions load_predictions(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  return parse_predictions(in, path.string());
}

void write_predictions(std::ostream& out, std::span<const Prediction> predictions) {
  for (const Prediction& p : predictions) {
    out << p.instance.doc << ' ' << p.instance.instance << ' ' << p.sense_key << '\n';
  }
}

ScoreReport score(const Predictions& predictions, const AnswerKey& key) {
  ScoreReport r;
  r.total = key.entries.size();
  for (const auto& [instance, sense] : predictions) {
    auto it = key.entries.find(instance);
    if (it == key.entries.end()) {
      ++r.unknown;
      continue;
    }
    ++r.attempted;
    for (const auto& gold : it->second) {
      if (gold == sense) {
        ++r.correct;
        break;
      }
    }
  }
  if (r.attempted) r.precision = static_cast<double>(r.correct) / static_cast<double>(r.attempted);
  if (r.total) r.recall = static_cast<double>(r.correct) / static_cast<double>(r.total);
  if (r.precision + r.recall > 0.0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

std::map<std::string, std::string> mcs_baseline(const Document& doc, const Lexicon& lex) {
  std::map<std::string, std::string> out;
  for (const Token& t : doc.tokens) {
    if (!t.instance_id) continue;
    const auto& senses = lex.senses_of(t.lemma, t.pos);
    if (!senses.empty()) out.emplace(*t.instance_id, lex.sense_key(senses.front()));
  }
  return out;
}

}  // namespace wsd
