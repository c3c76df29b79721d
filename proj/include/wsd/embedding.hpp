#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>

#include "wsd/geometric_median.hpp"
#include "wsd/relatedness.hpp"
#include "wsd/vectors.hpp"

namespace wsd {

enum class CentroidMethod { geometric_median, coordinate_median };

struct SenseCentroid {
  SynsetId synset;
  Point vector;
  std::size_t support = 0;  // word vectors that contributed
};

/// Centroid of the word vectors of the synset's disambiguation vocabulary
/// (raw words, not stems). Absent when no word is in the store.
std::optional<SenseCentroid> embed_centroid(const Lexicon& lex, const VectorStore& store,
                                            SynsetId s, const StopwordSet& stopwords,
                                            CentroidMethod method = CentroidMethod::geometric_median);

/// Cosine similarity; 0 when either vector has zero norm.
double cosine(std::span<const double> a, std::span<const double> b);

/// Cosine between sense centroids; 0 when either centroid is absent.
class EmbeddingMeasure final : public RelatednessMeasure {
 public:
  EmbeddingMeasure(const Lexicon& lex, const VectorStore& store, StopwordSet stopwords,
                   CentroidMethod method = CentroidMethod::geometric_median);

  double relatedness(SynsetId a, SynsetId b) const override;
  const std::optional<SenseCentroid>& centroid(SynsetId id) const;

 private:
  const Lexicon& lex_;
  const VectorStore& store_;
  StopwordSet stopwords_;
  CentroidMethod method_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<SynsetId, std::optional<SenseCentroid>, SynsetIdHash> centroids_;
};

}  // namespace wsd
