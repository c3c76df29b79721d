#include "wsd/relatedness.hpp"

namespace wsd {

std::uint64_t PairCache::key(SynsetId a, SynsetId b) {
  std::uint64_t x = pack(a);
  std::uint64_t y = pack(b);
  if (y < x) std::swap(x, y);
  return (x << 32) | y;
}

PairCache::Shard& PairCache::shard(std::uint64_t key) const {
  // Mix both halves so pairs sharing a first synset spread across shards.
  const std::uint64_t h = (key ^ (key >> 29)) * 0x9e3779b97f4a7c15ull;
  return shards_[(h >> 58) % kShards];
}

bool PairCache::lookup(SynsetId a, SynsetId b, double& value) const {
  const std::uint64_t k = key(a, b);
  Shard& s = shard(k);
  std::lock_guard lock(s.mutex);
  auto it = s.values.find(k);
  if (it == s.values.end()) return false;
  value = it->second;
  return true;
}

void PairCache::store(SynsetId a, SynsetId b, double value) {
  const std::uint64_t k = key(a, b);
  Shard& s = shard(k);
  std::lock_guard lock(s.mutex);
  s.values.insert_or_assign(k, value);
}

std::size_t PairCache::size() const {
  std::size_t n = 0;
  for (const Shard& s : shards_) {
    std::lock_guard lock(s.mutex);
    n += s.values.size();
  }
  return n;
}

double CachedMeasure::relatedness(SynsetId a, SynsetId b) const {
  double value = 0.0;
  if (cache_.lookup(a, b, value)) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    return value;
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  value = inner_->relatedness(a, b);
  cache_.store(a, b, value);
  return value;
}

double CachedMeasure::hit_rate() const {
  const double total = static_cast<double>(hits() + misses());
  return total == 0.0 ? 0.0 : static_cast<double>(hits()) / total;
}

std::shared_ptr<CachedMeasure> cached(std::shared_ptr<const RelatednessMeasure> measure) {
  return std::make_shared<CachedMeasure>(std::move(measure));
}

}  // namespace wsd
