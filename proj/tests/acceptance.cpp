// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Criterion 10 runs only when benchmark data is supplied through
// the WSD_BENCH_* environment variables.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <numbers>
#include <sstream>
#include <thread>
#include <tuple>

#include "wsd/cli.hpp"
#include "wsd/embedding.hpp"
#include "wsd/geometric_median.hpp"
#include "wsd/porter.hpp"
#include "wsd/relatedness.hpp"
#include "wsd/shotgun.hpp"

using namespace wsd;

namespace {

const std::string kData = WSD_TEST_DATA_DIR;

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

void report_skip(int criterion, const std::string& name, const std::string& detail) {
  std::printf("[SKIP] criterion %d: %s -- %s\n", criterion, name.c_str(), detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Toy {
  Lexicon lex = load_toy_lexicon(kData + "/toy_lexicon.txt");
  VectorStore vectors = load_vectors(kData + "/toy_vectors.txt", VectorFormat::text);
  std::vector<Document> corpus = load_corpus(kData + "/toy_corpus.txt", CorpusFormat::canonical);

  std::shared_ptr<CachedMeasure> lesk() const {
    return cached(std::make_shared<LeskMeasure>(lex, StopwordSet::smart()));
  }
  std::shared_ptr<CachedMeasure> embeddings() const {
    return cached(std::make_shared<EmbeddingMeasure>(lex, vectors, StopwordSet::smart()));
  }
};

class ScaledMeasure final : public RelatednessMeasure {
 public:
  ScaledMeasure(const RelatednessMeasure& inner, double factor) : inner_(inner), factor_(factor) {}
  double relatedness(SynsetId a, SynsetId b) const override { return factor_ * inner_(a, b); }

 private:
  const RelatednessMeasure& inner_;
  double factor_;
};

double double_loop(const std::vector<SynsetId>& senses, const RelatednessMeasure& m) {
  double r = 0.0;
  for (std::size_t p = 0; p < senses.size(); ++p) {
    for (std::size_t q = p + 1; q < senses.size(); ++q) r += m(senses[p], senses[q]);
  }
  return r;
}

std::vector<Document> random_documents(const Lexicon& lex, std::size_t count, std::uint32_t seed) {
  std::vector<std::pair<std::string, Pos>> lemmas;
  for (const auto& [lemma, pos] : lex.lemmas()) {
    const std::size_t s = lex.senses_of(lemma, pos).size();
    if (s >= 1 && s <= 3) lemmas.emplace_back(lemma, pos);
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> len(3, 8), pick(0, lemmas.size() - 1);
  std::vector<Document> docs;
  for (std::size_t d = 0; d < count; ++d) {
    Document doc{"r" + std::to_string(d), {}};
    const std::size_t m = len(rng);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& [lemma, pos] = lemmas[pick(rng)];
      doc.tokens.push_back({lemma, lemma, pos, "t" + std::to_string(i)});
      if (i % 2 == 0) doc.tokens.push_back({"the", "", Pos::other, std::nullopt});
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

// Criteria 1 and 2 share their runs.
void oracle_and_scores(const Toy& toy) {
  const auto docs = random_documents(toy.lex, 250, 20240601);
  const auto lesk = toy.lesk();
  const auto emb = toy.embeddings();
  std::size_t cases = 0, agree = 0;
  std::size_t checked = 0, base = 0, merged = 0, bad = 0;
  double worst = 0.0;

  const auto check_pool = [&](const ShotgunResult& r, const RelatednessMeasure& m) {
    for (std::size_t i = 0; i < r.pool.size(); ++i) {
      const double diff = std::abs(r.pool[i].score - double_loop(r.pool[i].senses, m));
      worst = std::max(worst, diff);
      ++checked;
      (i < r.base_configurations ? base : merged) += 1;
      if (diff > 1e-9) ++bad;
    }
  };

  const auto t0 = std::chrono::steady_clock::now();
  for (const RelatednessMeasure* m : {static_cast<const RelatednessMeasure*>(lesk.get()),
                                      static_cast<const RelatednessMeasure*>(emb.get())}) {
    for (const Document& doc : docs) {
      const TargetSequence targets = build_targets(doc, toy.lex);
      const Params p{targets.size(), 1, 1};
      const GlobalConfiguration shotgun = shotgun_wsd(doc, toy.lex, *m, p);
      const GlobalConfiguration oracle = brute_force_global(doc, toy.lex, *m);
      ++cases;
      agree += shotgun == oracle;
      check_pool(run_shotgun(targets, *m, p), *m);
    }
  }
  const double elapsed = seconds_since(t0);
  report(1, "oracle equivalence (single-window reduction)", agree == cases && elapsed < 10.0,
         std::to_string(agree) + "/" + std::to_string(cases) + " documents agree (250 per measure, lesk + embeddings), " +
             std::to_string(elapsed).substr(0, 5) + " s");

  // The single-window runs above produce no merges; rerun the same documents
  // with short windows so merged configurations are covered as well.
  for (const RelatednessMeasure* m : {static_cast<const RelatednessMeasure*>(lesk.get()),
                                      static_cast<const RelatednessMeasure*>(emb.get())}) {
    for (const Document& doc : docs) {
      const TargetSequence targets = build_targets(doc, toy.lex);
      for (std::size_t n : {2, 3}) {
        if (targets.size() <= n) continue;
        Params p;
        p.n = n;
        check_pool(run_shotgun(targets, *m, p), *m);
      }
    }
  }
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "%zu configurations (%zu base, %zu merged), %zu outside 1e-9, max |diff| %.3g", checked, base,
                merged, bad, worst);
  report(2, "score-definition consistency", bad == 0 && merged > 0, detail);
}

std::string key_file(const std::string& measure, std::size_t workers) {
  RunConfig cfg;
  cfg.command = Command::disambiguate;
  cfg.lexicon = kData + "/toy_lexicon.txt";
  cfg.input = kData + "/toy_corpus.txt";
  cfg.measure = measure == "lesk" ? MeasureKind::lesk : MeasureKind::embeddings;
  cfg.vectors = kData + "/toy_vectors.txt";
  cfg.vector_format = VectorFormat::text;
  cfg.workers = workers;
  std::ostringstream out, err;
  if (run_command(cfg, out, err) != 0) return "error: " + err.str();
  return out.str();
}

void determinism() {
  bool same = true;
  std::size_t files = 0;
  std::string lines;
  for (const std::string measure : {"embeddings", "lesk"}) {
    const std::string reference = key_file(measure, 1);
    same = same && reference.rfind("error", 0) != 0 && !reference.empty();
    for (int rep = 0; rep < 4; ++rep) {
      same = same && key_file(measure, 1) == reference;
      ++files;
    }
    for (std::size_t workers : {2, 8}) {
      same = same && key_file(measure, workers) == reference;
      ++files;
    }
    ++files;
    if (lines.empty()) lines = std::to_string(std::count(reference.begin(), reference.end(), '\n'));
  }
  report(3, "determinism", same,
         std::to_string(files) + " key files (5 repeats + workers {1,2,8}, both measures, defaults n=8 k=15 c=20), " +
             lines + " lines each, byte-identical");
}

void scaling(const Toy& toy) {
  const auto lesk = toy.lesk();
  const ScaledMeasure scaled(*lesk, 7.0);
  const Params p;
  std::size_t same = 0;
  for (const Document& doc : toy.corpus) {
    same += shotgun_wsd(doc, toy.lex, *lesk, p) == shotgun_wsd(doc, toy.lex, scaled, p);
  }
  report(4, "positive-scaling invariance (lesk x7)", same == toy.corpus.size(),
         std::to_string(same) + "/" + std::to_string(toy.corpus.size()) + " toy documents identical");
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

void lesk_fixtures(const Toy& toy) {
  std::size_t ok = 0, total = 0;
  const auto expect = [&](std::uint64_t got, std::uint64_t want) {
    ++total;
    ok += got == want;
  };
  expect(lesk_overlap(words("a b c d"), words("x b c y")), 4);
  expect(lesk_overlap(words("a b c"), words("a b c")), 9);
  expect(lesk_overlap(words("a b c"), words("x y z")), 0);

  const LeskMeasure lesk(toy.lex, StopwordSet::smart());
  const auto n = [](std::uint32_t id) { return SynsetId{Pos::noun, id}; };
  const auto v = [](std::uint32_t id) { return SynsetId{Pos::verb, id}; };
  const auto a = [](std::uint32_t id) { return SynsetId{Pos::adjective, id}; };
  // Derived with tests/oracles/lesk_oracle.py.
  const std::vector<std::tuple<SynsetId, SynsetId, std::uint64_t>> fixtures{
      {n(101), n(117), 12}, {n(102), n(107), 53}, {n(101), n(102), 10}, {n(110), v(203), 3},
      {n(111), a(301), 9},  {n(122), v(201), 17}, {n(119), n(120), 44}, {n(125), v(205), 8},
      {n(101), v(210), 10}, {n(106), v(211), 12}};
  for (const auto& [x, y, want] : fixtures) expect(lesk.lesk_relatedness(x, y), want);
  report(5, "extended Lesk fixtures", ok == total,
         std::to_string(ok) + "/" + std::to_string(total) + " exact (3 overlap examples + 10 toy-lexicon values)");
}

void porter() {
  std::ifstream words_in(kData + "/porter_vocabulary.txt");
  std::ifstream stems_in(kData + "/porter_output.txt");
  std::size_t total = 0, mismatches = 0;
  std::string word, stem;
  while (std::getline(words_in, word) && std::getline(stems_in, stem)) {
    ++total;
    mismatches += porter_stem(word) != stem;
  }
  report(6, "Porter stemmer reference vocabulary", total > 23000 && mismatches == 0,
         std::to_string(total) + " pairs, " + std::to_string(mismatches) + " mismatches");
}

void median() {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dim_dist(3, 50), count_dist(1, 20), shape(0, 3);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::size_t ok = 0;
  double worst = -1e300;
  for (int set = 0; set < 100; ++set) {
    const auto dim = static_cast<std::size_t>(dim_dist(rng));
    const auto count = static_cast<std::size_t>(count_dist(rng));
    std::vector<Point> pts(count, Point(dim));
    const int kind = shape(rng);
    for (std::size_t i = 0; i < count; ++i) {
      for (double& x : pts[i]) x = normal(rng) * (kind == 1 && i == 0 ? 100.0 : 1.0);
      // Repeated points pull the optimum onto an input vertex.
      if (kind == 2 && i > 0 && i % 2 == 0) pts[i] = pts[0];
      if (kind == 3) for (double& x : pts[i]) x = std::round(x);
    }
    const double objective = distance_sum(pts, geometric_median(pts));
    double bound = distance_sum(pts, mean(pts));
    for (const Point& p : pts) bound = std::min(bound, distance_sum(pts, p));
    worst = std::max(worst, objective - bound);
    ok += objective <= bound + 1e-6;
  }

  const auto near = [](const Point& got, const Point& want) {
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (std::abs(got[i] - want[i]) > 1e-4) return false;
    }
    return true;
  };
  std::size_t sym_ok = 0;
  sym_ok += near(geometric_median(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}), {0.5, 0.5});
  sym_ok += near(geometric_median(std::vector<Point>{{-2, 3}, {4, 3}, {-2, 9}, {4, 9}}), {1, 6});
  std::vector<Point> cube;
  for (int b = 0; b < 8; ++b) cube.push_back({double(b & 1), double((b >> 1) & 1), double((b >> 2) & 1)});
  sym_ok += near(geometric_median(cube), {0.5, 0.5, 0.5});
  std::vector<Point> hexagon;
  for (int i = 0; i < 6; ++i) hexagon.push_back({std::cos(i * std::numbers::pi / 3), std::sin(i * std::numbers::pi / 3)});
  sym_ok += near(geometric_median(hexagon), {0.0, 0.0});

  char detail[200];
  std::snprintf(detail, sizeof detail,
                "%zu/100 random sets within 1e-6 of min(inputs, mean) (max excess %.3g); %zu/4 symmetric fixtures within 1e-4",
                ok, worst, sym_ok);
  report(7, "geometric median properties", ok == 100 && sym_ok == 4, detail);
}

void ablation(const Toy& toy) {
  const Document doc = load_document(kData + "/ablation_document.txt", CorpusFormat::canonical);
  const Params p;
  std::string detail;
  bool default_differs = false;
  for (const auto& [name, measure] : {std::pair{std::string("embeddings"), toy.embeddings()},
                                      std::pair{std::string("lesk"), toy.lesk()}}) {
    const auto with = shotgun_wsd(doc, toy.lex, *measure, p);
    const auto without = shotgun_wsd_no_assembly(doc, toy.lex, *measure, p);
    std::size_t changed = 0;
    for (std::size_t j = 0; j < with.choices.size(); ++j) changed += with.choices[j] != without.choices[j];
    if (name == "embeddings") default_differs = changed > 0;
    detail += name + ": " + std::to_string(changed) + " of " + std::to_string(with.choices.size()) +
              " senses change; ";
  }
  detail += "benchmark-scale F1 gap not reproducible without the evaluation corpora";
  report(8, "assembly ablation effect", default_differs, detail);
}

void window_accounting(const Toy& toy) {
  const auto lesk = toy.lesk();
  std::size_t runs = 0, ok = 0;
  for (const Document& doc : toy.corpus) {
    const TargetSequence t = build_targets(doc, toy.lex);
    for (std::size_t n : {2, 3, 4, 5, 8}) {
      if (n >= t.size()) continue;
      Params p;
      p.n = n;
      const ShotgunResult r = run_shotgun(t, *lesk, p);
      bool good = r.windows() == t.size() - n + 1;
      for (std::size_t i = 0; good && i < r.windows(); ++i) {
        std::uint64_t product = 1;
        for (std::size_t j = i; j < i + n; ++j) product *= t.positions[j].senses.size();
        good = r.window_products[i] == product;
      }
      ++runs;
      ok += good;
    }
  }
  report(9, "window count and per-window configuration counts", runs > 0 && ok == runs,
         std::to_string(ok) + "/" + std::to_string(runs) + " (document, n) runs with m-n+1 windows and counters = sense products");
}

void benchmark_runbook() {
  const char* wordnet = std::getenv("WSD_BENCH_WORDNET");
  const char* vectors = std::getenv("WSD_BENCH_VECTORS");
  const char* corpus = std::getenv("WSD_BENCH_CORPUS");
  const char* key = std::getenv("WSD_BENCH_KEY");
  const std::string name = "benchmark F1 within 1.5 points of 79.15 (lesk) / 79.68 (embeddings)";
  if (!wordnet || !vectors || !corpus || !key) {
    report_skip(10, name,
                "optional runbook; set WSD_BENCH_WORDNET, WSD_BENCH_VECTORS, WSD_BENCH_CORPUS and WSD_BENCH_KEY");
    return;
  }
  std::string detail;
  bool pass = true;
  for (const auto& [measure, target] : {std::pair{MeasureKind::lesk, 0.7915}, std::pair{MeasureKind::embeddings, 0.7968}}) {
    RunConfig cfg;
    cfg.command = Command::disambiguate;
    cfg.lexicon = wordnet;
    cfg.vectors = vectors;
    cfg.input = corpus;
    cfg.format = CorpusFormat::senseval_xml;
    cfg.measure = measure;
    cfg.workers = std::max(1u, std::thread::hardware_concurrency());
    std::ostringstream out, err;
    const int status = run_command(cfg, out, err);
    std::istringstream in(out.str());
    const ScoreReport r = score(parse_predictions(in), load_key(key));
    const bool ok = status == 0 && std::abs(r.f1 - target) <= 0.015;
    pass = pass && ok;
    detail += std::string(measure == MeasureKind::lesk ? "lesk " : "embeddings ") + format_percent(r.f1) + "; ";
  }
  report(10, name, pass, detail);
}

}  // namespace

int main() {
  const Toy toy;
  oracle_and_scores(toy);
  determinism();
  scaling(toy);
  lesk_fixtures(toy);
  porter();
  median();
  ablation(toy);
  window_accounting(toy);
  benchmark_runbook();
  std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED");
  return failures ? 1 : 0;
}
