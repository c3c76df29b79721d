#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsd/corpus.hpp"
#include "wsd/embedding.hpp"
#include "wsd/shotgun.hpp"
#include "wsd/vectors.hpp"

namespace wsd {

enum class Command { disambiguate, evaluate, oracle, mcs, sweep };
enum class MeasureKind { lesk, embeddings };

/// Bad flag combinations; the front end exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::disambiguate;
  std::filesystem::path lexicon;
  std::optional<std::filesystem::path> vectors;
  VectorFormat vector_format = VectorFormat::binary;
  std::optional<std::filesystem::path> stopwords;
  MeasureKind measure = MeasureKind::embeddings;
  CentroidMethod centroid = CentroidMethod::geometric_median;
  Params params;
  std::filesystem::path input;
  CorpusFormat format = CorpusFormat::canonical;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> key;
  std::optional<std::filesystem::path> predictions;
  std::size_t workers = 1;
  std::uint64_t guard = kDefaultProductGuard;
  std::size_t max_pool = kDefaultPoolGuard;
  bool assembly = true;
  bool timing = false;
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> k_values;

  /// Throws UsageError when an input the command needs is missing or the
  /// parameters are invalid.
  void validate() const;
};

// Each command writes its data to `cfg.output` when set, otherwise to `out`,
// and diagnostics to `err`. The return value is the process exit status.
int run_disambiguate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_mcs(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Validates and dispatches on `cfg.command`. Exceptions become a message
/// on `err`: status 2 for usage errors, 1 otherwise.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// 0.6667 -> "66.67%".
std::string format_percent(double ratio);

}  // namespace wsd
