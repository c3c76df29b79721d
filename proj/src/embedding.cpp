#include "wsd/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace wsd {

std::optional<SenseCentroid> embed_centroid(const Lexicon& lex, const VectorStore& store,
                                            SynsetId s, const StopwordSet& stopwords,
                                            CentroidMethod method) {
  const DisambVocabulary vocab = build_disamb_vocabulary(lex, lex.synset(s), stopwords);
  std::vector<Point> points;
  for (const std::string& word : vocab.word_set) {
    if (auto v = store.lookup(word)) points.emplace_back(v->begin(), v->end());
  }
  if (points.empty()) return std::nullopt;
  SenseCentroid c;
  c.synset = s;
  c.support = points.size();
  c.vector = method == CentroidMethod::geometric_median ? geometric_median(points)
                                                        : coordinate_median(points);
  return c;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

EmbeddingMeasure::EmbeddingMeasure(const Lexicon& lex, const VectorStore& store,
                                   StopwordSet stopwords, CentroidMethod method)
    : lex_(lex), store_(store), stopwords_(std::move(stopwords)), method_(method) {}

const std::optional<SenseCentroid>& EmbeddingMeasure::centroid(SynsetId id) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = centroids_.find(id); it != centroids_.end()) return it->second;
  }
  // Computed unlocked; a concurrent duplicate is identical and discarded.
  auto fresh = embed_centroid(lex_, store_, id, stopwords_, method_);
  std::lock_guard lock(mutex_);
  return centroids_.emplace(id, std::move(fresh)).first->second;
}

double EmbeddingMeasure::relatedness(SynsetId a, SynsetId b) const {
  const auto& ca = centroid(a);
  const auto& cb = centroid(b);
  if (!ca || !cb) return 0.0;
  return cosine(ca->vector, cb->vector);
}

}  // namespace wsd
