#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsd/lexicon.hpp"
#include "wsd/pos.hpp"

namespace wsd {

struct Token {
  std::string surface;
  std::string lemma;  // lowercased; empty when unannotated
  Pos pos = Pos::other;
  std::optional<std::string> instance_id;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Document {
  std::string id;
  std::vector<Token> tokens;

  friend bool operator==(const Document&, const Document&) = default;
};

enum class CorpusFormat { canonical, senseval_xml };

/// Canonical text format: a `#doc <id>` line opens each document, followed
/// by one `surface pos-tag lemma instance-id` line per token (`-` marks an
/// absent lemma or id). Blank lines separate documents.
std::vector<Document> parse_canonical(std::istream& in, std::string_view source = "<corpus>");

/// Reads `<text id>` blocks with `<instance>`, `<wf>` and `<head>` elements
/// (id, lemma and pos attributes); bare text becomes unannotated tokens and
/// all other markup is skipped.
std::vector<Document> parse_senseval_xml(std::istream& in, std::string_view source = "<xml>");

std::vector<Document> load_corpus(const std::filesystem::path& path, CorpusFormat format);

/// A file holding exactly one document. An empty file yields an empty
/// Document; more than one document is a ParseError.
Document load_document(const std::filesystem::path& path, CorpusFormat format);

std::string serialize_document(const Document& doc);
void write_canonical(std::ostream& out, std::span<const Document> docs);

struct InstanceKey {
  std::string doc;
  std::string instance;

  friend auto operator<=>(const InstanceKey&, const InstanceKey&) = default;
};

using Predictions = std::map<InstanceKey, std::string>;

struct AnswerKey {
  std::map<InstanceKey, std::vector<std::string>> entries;
};

/// Lines of `<doc-id> <instance-id> <sense-key>[ <sense-key>...]`.
AnswerKey parse_key(std::istream& in, std::string_view source = "<key>");
AnswerKey load_key(const std::filesystem::path& path);
/// Same layout with exactly one sense key per line.
Predictions parse_predictions(std::istream& in, std::string_view source = "<predictions>");
Predictions load_predictions(const std::filesystem::path& path);

struct Prediction {
  InstanceKey instance;
  std::string sense_key;
};
void write_predictions(std::ostream& out, std::span<const Prediction> predictions);

struct ScoreReport {
  std::size_t attempted = 0;
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t unknown = 0;  // predictions for instances absent from the key
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

ScoreReport score(const Predictions& predictions, const AnswerKey& key);

/// First-listed sense for every annotated instance the lexicon knows.
std::map<std::string, std::string> mcs_baseline(const Document& doc, const Lexicon& lex);

}  // namespace wsd
