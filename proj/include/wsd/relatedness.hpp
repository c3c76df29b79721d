#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wsd/lexicon.hpp"
#include "wsd/vocabulary.hpp"

namespace wsd {

/// Semantic relatedness between two synsets. Implementations must be
/// symmetric, deterministic, and safe to call from several threads.
class RelatednessMeasure {
 public:
  virtual ~RelatednessMeasure() = default;
  virtual double relatedness(SynsetId a, SynsetId b) const = 0;
  double operator()(SynsetId a, SynsetId b) const { return relatedness(a, b); }
};

/// Greedy extended-Lesk overlap: repeatedly take the longest common run of
/// tokens (earliest in `a`, then earliest in `b`), replace it by a fresh
/// marker on both sides and add its squared length.
/// Token ids must be below 2^31; larger values are reserved for markers.
std::uint64_t lesk_overlap(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::uint64_t lesk_overlap(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Extended Lesk over relation-expanded disambiguation vocabularies. Pairs
/// of different POS compare only their own lemmas, gloss and examples.
class LeskMeasure final : public RelatednessMeasure {
 public:
  LeskMeasure(const Lexicon& lex, StopwordSet stopwords);

  double relatedness(SynsetId a, SynsetId b) const override {
    return static_cast<double>(lesk_relatedness(a, b));
  }
  /// Throws std::out_of_range for synsets outside the lexicon.
  std::uint64_t lesk_relatedness(SynsetId a, SynsetId b) const;

 private:
  struct Profile {
    std::vector<std::vector<std::uint32_t>> texts;
    std::size_t own_count = 0;
  };

  const Profile& profile(SynsetId id) const;

  const Lexicon& lex_;
  StopwordSet stopwords_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, std::uint32_t> stem_ids_;
  mutable std::unordered_map<SynsetId, Profile, SynsetIdHash> profiles_;
};

/// Memo table keyed by the unordered synset pair. Sharded so concurrent
/// window workers rarely contend; concurrent inserts of one key are benign
/// because values are deterministic.
class PairCache {
 public:
  static std::uint64_t key(SynsetId a, SynsetId b);

  bool lookup(SynsetId a, SynsetId b, double& value) const;
  void store(SynsetId a, SynsetId b, double value);
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::uint64_t, double> values;
  };
  Shard& shard(std::uint64_t key) const;

  mutable std::array<Shard, kShards> shards_;
};

class CachedMeasure final : public RelatednessMeasure {
 public:
  explicit CachedMeasure(std::shared_ptr<const RelatednessMeasure> inner)
      : inner_(std::move(inner)) {}

  double relatedness(SynsetId a, SynsetId b) const override;

  std::size_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::size_t misses() const { return misses_.load(std::memory_order_relaxed); }
  double hit_rate() const;
  std::size_t size() const { return cache_.size(); }

 private:
  std::shared_ptr<const RelatednessMeasure> inner_;
  mutable PairCache cache_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

std::shared_ptr<CachedMeasure> cached(std::shared_ptr<const RelatednessMeasure> measure);

}  // namespace wsd
