#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wsd/corpus.hpp"
#include "wsd/lexicon.hpp"
#include "wsd/relatedness.hpp"

namespace wsd {

inline constexpr std::uint64_t kDefaultProductGuard = 100'000'000;
inline constexpr std::size_t kDefaultPoolGuard = 2'000'000;

/// Window length n, voting depth k, configurations kept per window c.
struct Params {
  std::size_t n = 8;
  std::size_t k = 15;
  std::size_t c = 20;

  /// Throws std::invalid_argument unless n > 1, k > 0 and c > 0.
  void validate() const;
};

struct TargetPosition {
  std::size_t token_index = 0;
  std::string lemma;
  Pos pos = Pos::other;
  std::vector<SenseEntry> senses;  // ordered by sense number, never empty
};

/// The sense-bearing words of a document in document order. Function words
/// and words unknown to the lexicon occupy no window slot.
struct TargetSequence {
  std::vector<TargetPosition> positions;

  std::size_t size() const { return positions.size(); }
  bool empty() const { return positions.empty(); }
};

TargetSequence build_targets(const Document& doc, const Lexicon& lex);

/// A sense assignment over the contiguous target span [start, start + length).
struct WindowConfiguration {
  std::vector<SynsetId> senses;
  std::vector<std::uint16_t> choices;  // index into each position's sense list
  std::size_t start = 0;
  double score = 0.0;

  std::size_t length() const { return senses.size(); }
  std::size_t end() const { return start + senses.size(); }
};

/// Final sense per target position.
struct GlobalConfiguration {
  std::vector<SynsetId> assignment;
  std::vector<std::uint16_t> choices;

  friend bool operator==(const GlobalConfiguration&, const GlobalConfiguration&) = default;
};

/// Sum of measure(C[p], C[q]) over all p < q. Terms are added column by
/// column (q outer, p inner); incremental window scoring adds them in the
/// same order, so both routes give bit-identical sums.
double config_score(std::span<const SynsetId> senses, const RelatednessMeasure& measure);

/// Product of sense counts over [start, start + n), saturating at UINT64_MAX.
std::uint64_t window_product(const TargetSequence& targets, std::size_t start, std::size_t n);

/// Best `c` configurations of the window at `start` (0-based) of length `n`:
/// score descending, ties toward lexicographically smaller sense indices.
/// Every configuration of the Cartesian product is scored. Throws
/// ResourceError when the product exceeds `guard`.
std::vector<WindowConfiguration> enumerate_window(const TargetSequence& targets, std::size_t start,
                                                  std::size_t n, const RelatednessMeasure& measure,
                                                  std::size_t c,
                                                  std::uint64_t guard = kDefaultProductGuard);

/// Suffix/prefix assembly. For overlap l from min(4, n - 1) down to 1, merges
/// every pair (P, Q) with Q.start - P.start == P.length - l whose last l
/// senses of P equal the first l of Q, until no new (senses, start) appears.
/// Returns the input followed by the merged configurations. Throws
/// ResourceError when the pool would exceed `max_pool` entries.
std::vector<WindowConfiguration> assemble(std::vector<WindowConfiguration> pool, std::size_t n,
                                          const RelatednessMeasure& measure,
                                          std::size_t max_pool = kDefaultPoolGuard);

/// Voting order: length desc, score desc, start asc, sense indices asc.
bool ranks_before(const WindowConfiguration& a, const WindowConfiguration& b);

struct VoteResult {
  SynsetId sense;
  std::uint16_t choice = 0;
  std::size_t votes = 0;
};

/// Majority vote among the top-k configurations covering `position`. Vote
/// ties go to the larger summed score of supporters, then the smaller sense
/// number. Throws std::invalid_argument when nothing covers the position.
VoteResult vote(std::span<const WindowConfiguration> pool, std::size_t position, std::size_t k);

/// Votes every position in [0, positions) with one pass over the ranked pool.
GlobalConfiguration vote_all(std::span<const WindowConfiguration> pool, std::size_t positions,
                             std::size_t k);

struct RunOptions {
  std::size_t workers = 1;
  std::uint64_t product_guard = kDefaultProductGuard;
  std::size_t pool_guard = kDefaultPoolGuard;
  bool assembly = true;
};

struct PhaseTimings {
  double enumeration = 0.0;  // seconds
  double assembly = 0.0;
  double voting = 0.0;
};

struct ShotgunResult {
  GlobalConfiguration global;
  std::vector<WindowConfiguration> pool;  // after assembly
  std::size_t base_configurations = 0;    // pool prefix produced by enumeration
  std::vector<std::uint64_t> window_products;  // configurations scored per window
  PhaseTimings timings;

  std::size_t windows() const { return window_products.size(); }
};

/// Windows at every start 0..m-n (one window of length m when m <= n),
/// enumerated in parallel on `options.workers` threads, then assembled and
/// voted. The result does not depend on the worker count.
ShotgunResult run_shotgun(const TargetSequence& targets, const RelatednessMeasure& measure,
                          const Params& params, const RunOptions& options = {});

GlobalConfiguration shotgun_wsd(const Document& doc, const Lexicon& lex,
                                const RelatednessMeasure& measure, const Params& params,
                                const RunOptions& options = {});
GlobalConfiguration shotgun_wsd_no_assembly(const Document& doc, const Lexicon& lex,
                                            const RelatednessMeasure& measure, const Params& params,
                                            RunOptions options = {});

/// Exhaustive search over every complete assignment; ties toward the
/// lexicographically smallest sense indices.
GlobalConfiguration brute_force_global(const TargetSequence& targets,
                                       const RelatednessMeasure& measure,
                                       std::uint64_t guard = kDefaultProductGuard);
GlobalConfiguration brute_force_global(const Document& doc, const Lexicon& lex,
                                       const RelatednessMeasure& measure,
                                       std::uint64_t guard = kDefaultProductGuard);

/// One prediction per annotated target token, in document order.
std::vector<Prediction> to_predictions(const Document& doc, const TargetSequence& targets,
                                       const GlobalConfiguration& global, const Lexicon& lex);

}  // namespace wsd
