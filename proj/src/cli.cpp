#include "wsd/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>

#include "wsd/error.hpp"
#include "wsd/lexicon.hpp"
#include "wsd/relatedness.hpp"
#include "wsd/vocabulary.hpp"

namespace wsd {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// Lexicon, optional vectors and the cached measure built over them.
struct Resources {
  std::unique_ptr<Lexicon> lex;
  std::unique_ptr<VectorStore> vectors;
  std::shared_ptr<CachedMeasure> measure;
};

StopwordSet stopwords_for(const RunConfig& cfg) {
  return cfg.stopwords ? StopwordSet::load(*cfg.stopwords) : StopwordSet::smart();
}

Resources load_resources(const RunConfig& cfg, bool with_measure) {
  Resources r;
  r.lex = std::make_unique<Lexicon>(load_lexicon(cfg.lexicon));
  if (!with_measure) return r;
  std::shared_ptr<const RelatednessMeasure> inner;
  if (cfg.measure == MeasureKind::lesk) {
    inner = std::make_shared<LeskMeasure>(*r.lex, stopwords_for(cfg));
  } else {
    r.vectors = std::make_unique<VectorStore>(load_vectors(*cfg.vectors, cfg.vector_format));
    inner = std::make_shared<EmbeddingMeasure>(*r.lex, *r.vectors, stopwords_for(cfg), cfg.centroid);
  }
  r.measure = cached(std::move(inner));
  return r;
}

// Routes data to the --output file when given, otherwise to `fallback`.
class DataSink {
 public:
  DataSink(const std::optional<std::filesystem::path>& path, std::ostream& fallback) {
    if (path) {
      file_.open(*path);
      if (!file_) throw LoadError("cannot write " + path->string());
    }
    stream_ = path ? static_cast<std::ostream*>(&file_) : &fallback;
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw LoadError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

RunOptions run_options(const RunConfig& cfg) {
  RunOptions o;
  o.workers = cfg.workers;
  o.product_guard = cfg.guard;
  o.pool_guard = cfg.max_pool;
  o.assembly = cfg.assembly;
  return o;
}

struct CorpusRun {
  std::vector<Prediction> predictions;
  std::uint64_t configurations = 0;
  std::size_t failures = 0;
};

// Disambiguates every document; a document that trips a resource guard is
// reported on `err` and contributes no predictions.
CorpusRun disambiguate_corpus(const std::vector<Document>& docs, const Resources& res,
                              const Params& params, const RunConfig& cfg, std::ostream& err) {
  CorpusRun run;
  const RunOptions options = run_options(cfg);
  if (cfg.timing) err << "doc\ttargets\tenumeration_s\tassembly_s\tvoting_s\ttotal_s\n";
  for (const Document& doc : docs) {
    const auto t0 = std::chrono::steady_clock::now();
    const TargetSequence targets = build_targets(doc, *res.lex);
    try {
      const ShotgunResult result = run_shotgun(targets, *res.measure, params, options);
      for (std::uint64_t count : result.window_products) run.configurations += count;
      auto preds = to_predictions(doc, targets, result.global, *res.lex);
      run.predictions.insert(run.predictions.end(), preds.begin(), preds.end());
      if (cfg.timing) {
        const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        err << doc.id << '\t' << targets.size() << '\t' << fixed(result.timings.enumeration, 3) << '\t'
            << fixed(result.timings.assembly, 3) << '\t' << fixed(result.timings.voting, 3) << '\t'
            << fixed(total, 3) << '\n';
      }
    } catch (const ResourceError& e) {
      err << "error: document " << doc.id << ": " << e.what() << '\n';
      ++run.failures;
    }
  }
  return run;
}

Predictions to_map(const std::vector<Prediction>& predictions) {
  Predictions out;
  for (const Prediction& p : predictions) out.emplace(p.instance, p.sense_key);
  return out;
}

void write_score_table(std::ostream& out, const ScoreReport& r) {
  out << "attempted\ttotal\tcorrect\tprecision\trecall\tf1\n"
      << r.attempted << '\t' << r.total << '\t' << r.correct << '\t' << format_percent(r.precision)
      << '\t' << format_percent(r.recall) << '\t' << format_percent(r.f1) << '\n';
}

}  // namespace

std::string format_percent(double ratio) { return fixed(ratio * 100.0, 2) + "%"; }

void RunConfig::validate() const {
  const bool needs_lexicon = command != Command::evaluate;
  const bool needs_measure = command == Command::disambiguate || command == Command::oracle ||
                             command == Command::sweep;
  if (needs_lexicon && lexicon.empty()) throw UsageError("--lexicon is required");
  if (needs_lexicon && input.empty()) throw UsageError("--input is required");
  if (needs_measure && measure == MeasureKind::embeddings && !vectors) {
    throw UsageError("--measure embeddings requires --vectors");
  }
  if (command == Command::evaluate && (!key || !predictions)) {
    throw UsageError("evaluate requires --key and --predictions");
  }
  if (command == Command::sweep) {
    if (!key) throw UsageError("sweep requires --key");
    if (n_values.empty() || k_values.empty()) {
      throw UsageError("sweep requires --n-values and --k-values");
    }
    for (std::size_t n : n_values) {
      if (n <= 1) throw UsageError("window length n must be greater than 1");
    }
    for (std::size_t k : k_values) {
      if (k == 0) throw UsageError("voting depth k must be positive");
    }
  }
  if (workers == 0) throw UsageError("--workers must be positive");
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int run_disambiguate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Resources res = load_resources(cfg, true);
  const auto docs = load_corpus(cfg.input, cfg.format);
  const CorpusRun run = disambiguate_corpus(docs, res, cfg.params, cfg, err);
  DataSink sink(cfg.output, out);
  write_predictions(sink.stream(), run.predictions);
  sink.finish();
  return run.failures ? 1 : 0;
}

int run_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const ScoreReport r = score(load_predictions(*cfg.predictions), load_key(*cfg.key));
  DataSink sink(cfg.output, out);
  write_score_table(sink.stream(), r);
  sink.finish();
  return 0;
}

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Resources res = load_resources(cfg, true);
  const auto docs = load_corpus(cfg.input, cfg.format);
  const RunOptions options = run_options(cfg);
  DataSink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  os << "doc\ttargets\tagreement\tshotgun_score\toracle_score\n";
  std::size_t agreed = 0;
  std::size_t positions = 0;
  std::size_t failures = 0;
  for (const Document& doc : docs) {
    const TargetSequence targets = build_targets(doc, *res.lex);
    try {
      const GlobalConfiguration oracle = brute_force_global(targets, *res.measure, cfg.guard);
      const GlobalConfiguration shotgun = run_shotgun(targets, *res.measure, cfg.params, options).global;
      std::size_t same = 0;
      for (std::size_t j = 0; j < targets.size(); ++j) same += shotgun.choices[j] == oracle.choices[j];
      agreed += same;
      positions += targets.size();
      const double ratio = targets.empty() ? 1.0 : static_cast<double>(same) / static_cast<double>(targets.size());
      os << doc.id << '\t' << targets.size() << '\t' << format_percent(ratio) << '\t'
         << fixed(config_score(shotgun.assignment, *res.measure), 6) << '\t'
         << fixed(config_score(oracle.assignment, *res.measure), 6) << '\n';
    } catch (const ResourceError& e) {
      err << "error: document " << doc.id << ": " << e.what() << '\n';
      ++failures;
    }
  }
  const double overall = positions ? static_cast<double>(agreed) / static_cast<double>(positions) : 1.0;
  os << "total\t" << positions << '\t' << format_percent(overall) << "\t-\t-\n";
  sink.finish();
  return failures ? 1 : 0;
}

int run_mcs(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Resources res = load_resources(cfg, false);
  const auto docs = load_corpus(cfg.input, cfg.format);
  std::vector<Prediction> predictions;
  for (const Document& doc : docs) {
    // Document order, matching the shotgun key files.
    const auto baseline = mcs_baseline(doc, *res.lex);
    for (const Token& t : doc.tokens) {
      if (!t.instance_id) continue;
      if (auto it = baseline.find(*t.instance_id); it != baseline.end()) {
        predictions.push_back({{doc.id, *t.instance_id}, it->second});
      }
    }
  }
  DataSink sink(cfg.output, out);
  write_predictions(sink.stream(), predictions);
  sink.finish();
  return 0;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Resources res = load_resources(cfg, true);
  const auto docs = load_corpus(cfg.input, cfg.format);
  const AnswerKey key = load_key(*cfg.key);
  RunConfig quiet = cfg;
  quiet.timing = false;
  DataSink sink(cfg.output, out);
  std::ostream& os = sink.stream();
  os << "n\tk\tattempted\tcorrect\tprecision\trecall\tf1\tconfigurations\tseconds\n";
  std::size_t failures = 0;
  for (std::size_t n : cfg.n_values) {
    for (std::size_t k : cfg.k_values) {
      Params params = cfg.params;
      params.n = n;
      params.k = k;
      const auto t0 = std::chrono::steady_clock::now();
      const CorpusRun run = disambiguate_corpus(docs, res, params, quiet, err);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      failures += run.failures;
      const ScoreReport r = score(to_map(run.predictions), key);
      os << n << '\t' << k << '\t' << r.attempted << '\t' << r.correct << '\t'
         << format_percent(r.precision) << '\t' << format_percent(r.recall) << '\t'
         << format_percent(r.f1) << '\t' << run.configurations << '\t' << fixed(seconds, 3) << '\n';
    }
  }
  sink.finish();
  return failures ? 1 : 0;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
    switch (cfg.command) {
      case Command::disambiguate: return run_disambiguate(cfg, out, err);
      case Command::evaluate: return run_evaluate(cfg, out, err);
      case Command::oracle: return run_oracle(cfg, out, err);
      case Command::mcs: return run_mcs(cfg, out, err);
      case Command::sweep: return run_sweep(cfg, out, err);
    }
    return 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wsd
