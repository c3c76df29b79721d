#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "wsd/error.hpp"
#include "wsd/shotgun.hpp"

namespace wsd {

namespace {

// Position of the first overlapping slot plus up to four packed senses.
using OverlapKey = std::array<std::uint32_t, 5>;

struct OverlapKeyHash {
  std::size_t operator()(const OverlapKey& key) const noexcept {
    std::size_t h = 0;
    for (std::uint32_t v : key) h = h * 0x9E3779B97F4A7C15ull + v;
    return h;
  }
};

OverlapKey overlap_key(const WindowConfiguration& cfg, std::size_t first, std::size_t l) {
  OverlapKey key{};
  key[0] = static_cast<std::uint32_t>(cfg.start + first);
  for (std::size_t x = 0; x < l; ++x) key[x + 1] = pack(cfg.senses[first + x]);
  return key;
}

// Set of pool indices, hashed and compared by (start, senses).
class PoolIndex {
 public:
  explicit PoolIndex(const std::vector<WindowConfiguration>& pool)
      : set_(16, Hash{&pool}, Equal{&pool}) {}

  bool insert(std::size_t index) { return set_.insert(index).second; }

 private:
  struct Hash {
    const std::vector<WindowConfiguration>* pool;
    std::size_t operator()(std::size_t i) const noexcept {
      const WindowConfiguration& c = (*pool)[i];
      std::size_t h = c.start;
      for (SynsetId s : c.senses) h = h * 0x9E3779B97F4A7C15ull + pack(s);
      return h;
    }
  };
  struct Equal {
    const std::vector<WindowConfiguration>* pool;
    bool operator()(std::size_t a, std::size_t b) const noexcept {
      const WindowConfiguration& x = (*pool)[a];
      const WindowConfiguration& y = (*pool)[b];
      return x.start == y.start && x.senses == y.senses;
    }
  };

  std::unordered_set<std::size_t, Hash, Equal> set_;
};

WindowConfiguration merge(const WindowConfiguration& p, const WindowConfiguration& q,
                          std::size_t l, const RelatednessMeasure& measure) {
  const std::size_t head = p.length() - l;
  WindowConfiguration out;
  out.start = p.start;
  out.senses = p.senses;
  out.choices = p.choices;
  out.senses.insert(out.senses.end(), q.senses.begin() + static_cast<std::ptrdiff_t>(l), q.senses.end());
  out.choices.insert(out.choices.end(), q.choices.begin() + static_cast<std::ptrdiff_t>(l), q.choices.end());

  const std::span<const SynsetId> shared(p.senses.data() + head, l);
  double cross = 0.0;
  for (std::size_t b = l; b < q.length(); ++b) {
    for (std::size_t a = 0; a < head; ++a) cross += measure(p.senses[a], q.senses[b]);
  }
  out.score = p.score + q.score - config_score(shared, measure) + cross;
  return out;
}

}  // namespace

std::vector<WindowConfiguration> assemble(std::vector<WindowConfiguration> pool, std::size_t n,
                                          const RelatednessMeasure& measure, std::size_t max_pool) {
  if (n < 2) return pool;
  if (pool.size() > max_pool) {
    throw ResourceError("configuration pool of " + std::to_string(pool.size()) +
                        " entries exceeds the limit of " + std::to_string(max_pool));
  }
  PoolIndex seen(pool);
  for (std::size_t i = 0; i < pool.size(); ++i) seen.insert(i);

  for (std::size_t l = std::min<std::size_t>(4, n - 1); l >= 1; --l) {
    // Each item is paired, in both roles, with every item processed before
    // it; merges are appended and processed in turn.
    std::unordered_map<OverlapKey, std::vector<std::size_t>, OverlapKeyHash> by_suffix;
    std::unordered_map<OverlapKey, std::vector<std::size_t>, OverlapKeyHash> by_prefix;

    const auto try_add = [&](std::size_t p, std::size_t q) {
      WindowConfiguration merged = merge(pool[p], pool[q], l, measure);
      pool.push_back(std::move(merged));
      if (!seen.insert(pool.size() - 1)) {
        pool.pop_back();
        return;
      }
      if (pool.size() > max_pool) {
        throw ResourceError("assembly grew the configuration pool beyond " +
                            std::to_string(max_pool) + " entries");
      }
    };

    for (std::size_t x = 0; x < pool.size(); ++x) {
      const std::size_t len = pool[x].length();
      if (len <= l) continue;
      const OverlapKey suffix = overlap_key(pool[x], len - l, l);
      const OverlapKey prefix = overlap_key(pool[x], 0, l);
      if (auto it = by_prefix.find(suffix); it != by_prefix.end()) {
        const std::vector<std::size_t> partners = it->second;
        for (std::size_t q : partners) try_add(x, q);
      }
      if (auto it = by_suffix.find(prefix); it != by_suffix.end()) {
        const std::vector<std::size_t> partners = it->second;
        for (std::size_t p : partners) try_add(p, x);
      }
      by_suffix[suffix].push_back(x);
      by_prefix[prefix].push_back(x);
    }
  }
  return pool;
}

}  // namespace wsd
