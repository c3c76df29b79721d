#include "wsd/shotgun.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

#include "wsd/error.hpp"

namespace wsd {

void Params::validate() const {
  if (n <= 1) throw std::invalid_argument("window length n must be greater than 1");
  if (k == 0) throw std::invalid_argument("voting depth k must be positive");
  if (c == 0) throw std::invalid_argument("candidates per window c must be positive");
}

TargetSequence build_targets(const Document& doc, const Lexicon& lex) {
  TargetSequence targets;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const Token& t = doc.tokens[i];
    if (!is_content(t.pos)) continue;
    const auto& senses = lex.senses_of(t.lemma, t.pos);
    if (senses.empty()) continue;
    if (senses.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw ResourceError("lemma '" + t.lemma + "' has too many senses");
    }
    targets.positions.push_back({i, t.lemma, t.pos, senses});
  }
  return targets;
}

double config_score(std::span<const SynsetId> senses, const RelatednessMeasure& measure) {
  double r = 0.0;
  for (std::size_t q = 1; q < senses.size(); ++q) {
    for (std::size_t p = 0; p < q; ++p) r += measure(senses[p], senses[q]);
  }
  return r;
}

std::uint64_t window_product(const TargetSequence& targets, std::size_t start, std::size_t n) {
  std::uint64_t product = 1;
  for (std::size_t i = start; i < start + n; ++i) {
    const std::uint64_t s = targets.positions[i].senses.size();
    if (product > std::numeric_limits<std::uint64_t>::max() / s) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    product *= s;
  }
  return product;
}

namespace {

struct Candidate {
  double score;
  std::vector<std::uint16_t> choices;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.choices < b.choices;
}

// Depth-first walk of the window's Cartesian product in lexicographic order
// of sense indices, accumulating the pair sum one column at a time.
class WindowSearch {
 public:
  WindowSearch(const TargetSequence& targets, std::size_t start, std::size_t n,
               const RelatednessMeasure& measure, std::size_t c)
      : targets_(targets), start_(start), n_(n), c_(c), sizes_(n), choice_(n, 0), tables_(n) {
    for (std::size_t i = 0; i < n; ++i) sizes_[i] = targets.positions[start + i].senses.size();
    // tables_[q][p][a * sizes_[q] + b] = measure(sense a at p, sense b at q)
    for (std::size_t q = 1; q < n; ++q) {
      tables_[q].resize(q);
      const auto& senses_q = targets.positions[start + q].senses;
      for (std::size_t p = 0; p < q; ++p) {
        const auto& senses_p = targets.positions[start + p].senses;
        auto& table = tables_[q][p];
        table.resize(sizes_[p] * sizes_[q]);
        for (std::size_t a = 0; a < sizes_[p]; ++a) {
          for (std::size_t b = 0; b < sizes_[q]; ++b) {
            table[a * sizes_[q] + b] = measure(senses_p[a].synset, senses_q[b].synset);
          }
        }
      }
    }
  }

  std::vector<WindowConfiguration> run(std::uint64_t& scored) {
    descend(0, 0.0);
    scored = scored_;
    std::sort(heap_.begin(), heap_.end(), better);
    std::vector<WindowConfiguration> out;
    out.reserve(heap_.size());
    for (Candidate& cand : heap_) {
      WindowConfiguration cfg;
      cfg.start = start_;
      cfg.score = cand.score;
      cfg.senses.reserve(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        cfg.senses.push_back(targets_.positions[start_ + i].senses[cand.choices[i]].synset);
      }
      cfg.choices = std::move(cand.choices);
      out.push_back(std::move(cfg));
    }
    return out;
  }

 private:
  void descend(std::size_t q, double running) {
    for (std::size_t b = 0; b < sizes_[q]; ++b) {
      choice_[q] = static_cast<std::uint16_t>(b);
      double r = running;
      for (std::size_t p = 0; p < q; ++p) r += tables_[q][p][choice_[p] * sizes_[q] + b];
      if (q + 1 == n_) {
        offer(r);
      } else {
        descend(q + 1, r);
      }
    }
  }

  void offer(double score) {
    ++scored_;
    // Candidates arrive in lexicographic order, so an equal score never
    // displaces an earlier one.
    if (heap_.size() < c_) {
      heap_.push_back({score, choice_});
      std::push_heap(heap_.begin(), heap_.end(), better);
    } else if (score > heap_.front().score) {
      std::pop_heap(heap_.begin(), heap_.end(), better);
      heap_.back() = {score, choice_};
      std::push_heap(heap_.begin(), heap_.end(), better);
    }
  }

  const TargetSequence& targets_;
  std::size_t start_;
  std::size_t n_;
  std::size_t c_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint16_t> choice_;
  std::vector<std::vector<std::vector<double>>> tables_;
  std::vector<Candidate> heap_;  // worst candidate on top
  std::uint64_t scored_ = 0;
};

std::vector<WindowConfiguration> enumerate_counted(const TargetSequence& targets, std::size_t start,
                                                   std::size_t n, const RelatednessMeasure& measure,
                                                   std::size_t c, std::uint64_t guard,
                                                   std::uint64_t& scored) {
  if (n == 0 || start + n > targets.size()) {
    throw std::out_of_range("window [" + std::to_string(start) + ", " + std::to_string(start + n) +
                            ") outside " + std::to_string(targets.size()) + " targets");
  }
  if (c == 0) throw std::invalid_argument("c must be positive");
  const std::uint64_t product = window_product(targets, start, n);
  if (product > guard) {
    throw ResourceError("window at target " + std::to_string(start) + " has " +
                        std::to_string(product) + " sense configurations, above the guard of " +
                        std::to_string(guard));
  }
  return WindowSearch(targets, start, n, measure, c).run(scored);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Tally {
  std::uint16_t choice;
  std::size_t votes;
  double score_sum;
  SynsetId sense;
};

void add_vote(std::vector<Tally>& tallies, const WindowConfiguration& cfg, std::size_t position) {
  const std::size_t offset = position - cfg.start;
  const std::uint16_t choice = cfg.choices[offset];
  for (Tally& t : tallies) {
    if (t.choice == choice) {
      ++t.votes;
      t.score_sum += cfg.score;
      return;
    }
  }
  tallies.push_back({choice, 1, cfg.score, cfg.senses[offset]});
}

const Tally& winner(const std::vector<Tally>& tallies) {
  const Tally* best = &tallies.front();
  for (const Tally& t : tallies) {
    if (t.votes != best->votes) {
      if (t.votes > best->votes) best = &t;
    } else if (t.score_sum != best->score_sum) {
      if (t.score_sum > best->score_sum) best = &t;
    } else if (t.choice < best->choice) {
      best = &t;
    }
  }
  return *best;
}

}  // namespace

std::vector<WindowConfiguration> enumerate_window(const TargetSequence& targets, std::size_t start,
                                                  std::size_t n, const RelatednessMeasure& measure,
                                                  std::size_t c, std::uint64_t guard) {
  std::uint64_t scored = 0;
  return enumerate_counted(targets, start, n, measure, c, guard, scored);
}

bool ranks_before(const WindowConfiguration& a, const WindowConfiguration& b) {
  if (a.length() != b.length()) return a.length() > b.length();
  if (a.score != b.score) return a.score > b.score;
  if (a.start != b.start) return a.start < b.start;
  return a.choices < b.choices;
}

VoteResult vote(std::span<const WindowConfiguration> pool, std::size_t position, std::size_t k) {
  std::vector<const WindowConfiguration*> covering;
  for (const auto& cfg : pool) {
    if (cfg.start <= position && position < cfg.end()) covering.push_back(&cfg);
  }
  if (covering.empty()) {
    throw std::invalid_argument("no configuration covers position " + std::to_string(position));
  }
  std::stable_sort(covering.begin(), covering.end(),
                   [](const auto* a, const auto* b) { return ranks_before(*a, *b); });
  covering.resize(std::min(k, covering.size()));
  std::vector<Tally> tallies;
  for (const auto* cfg : covering) add_vote(tallies, *cfg, position);
  const Tally& w = winner(tallies);
  return {w.sense, w.choice, w.votes};
}

GlobalConfiguration vote_all(std::span<const WindowConfiguration> pool, std::size_t positions,
                             std::size_t k) {
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ranks_before(pool[a], pool[b]); });

  std::vector<std::size_t> filled(positions, 0);
  std::vector<std::vector<Tally>> tallies(positions);
  std::size_t complete = 0;
  for (std::size_t idx : order) {
    if (complete == positions) break;
    const WindowConfiguration& cfg = pool[idx];
    for (std::size_t j = cfg.start; j < cfg.end() && j < positions; ++j) {
      if (filled[j] == k) continue;
      add_vote(tallies[j], cfg, j);
      if (++filled[j] == k) ++complete;
    }
  }

  GlobalConfiguration g;
  g.assignment.reserve(positions);
  g.choices.reserve(positions);
  for (std::size_t j = 0; j < positions; ++j) {
    if (tallies[j].empty()) {
      throw std::invalid_argument("no configuration covers position " + std::to_string(j));
    }
    const Tally& w = winner(tallies[j]);
    g.assignment.push_back(w.sense);
    g.choices.push_back(w.choice);
  }
  return g;
}

ShotgunResult run_shotgun(const TargetSequence& targets, const RelatednessMeasure& measure,
                          const Params& params, const RunOptions& options) {
  params.validate();
  ShotgunResult result;
  const std::size_t m = targets.size();
  if (m == 0) return result;

  const std::size_t n = std::min(params.n, m);
  const std::size_t windows = m - n + 1;
  std::vector<std::vector<WindowConfiguration>> slots(windows);
  std::vector<std::uint64_t> scored(windows, 0);
  std::vector<std::exception_ptr> errors(windows);

  auto t0 = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t w = next.fetch_add(1); w < windows; w = next.fetch_add(1)) {
      try {
        slots[w] = enumerate_counted(targets, w, n, measure, params.c, options.product_guard, scored[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(options.workers, 1, windows);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& slot : slots) {
    for (auto& cfg : slot) result.pool.push_back(std::move(cfg));
  }
  result.base_configurations = result.pool.size();
  result.window_products = std::move(scored);
  result.timings.enumeration = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  if (options.assembly) {
    result.pool = assemble(std::move(result.pool), n, measure, options.pool_guard);
  }
  result.timings.assembly = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  result.global = vote_all(result.pool, m, params.k);
  result.timings.voting = seconds_since(t0);
  return result;
}

GlobalConfiguration shotgun_wsd(const Document& doc, const Lexicon& lex,
                                const RelatednessMeasure& measure, const Params& params,
                                const RunOptions& options) {
  return run_shotgun(build_targets(doc, lex), measure, params, options).global;
}

GlobalConfiguration shotgun_wsd_no_assembly(const Document& doc, const Lexicon& lex,
                                            const RelatednessMeasure& measure, const Params& params,
                                            RunOptions options) {
  options.assembly = false;
  return shotgun_wsd(doc, lex, measure, params, options);
}

GlobalConfiguration brute_force_global(const TargetSequence& targets,
                                       const RelatednessMeasure& measure, std::uint64_t guard) {
  GlobalConfiguration best;
  const std::size_t m = targets.size();
  if (m == 0) return best;
  const std::uint64_t product = window_product(targets, 0, m);
  if (product > guard) {
    throw ResourceError("document has " + std::to_string(product) +
                        " global sense configurations, above the guard of " + std::to_string(guard));
  }

  std::vector<std::uint16_t> choice(m, 0);
  std::vector<SynsetId> senses(m);
  double best_score = 0.0;
  bool have_best = false;
  while (true) {
    for (std::size_t i = 0; i < m; ++i) senses[i] = targets.positions[i].senses[choice[i]].synset;
    const double s = config_score(senses, measure);
    if (!have_best || s > best_score) {
      best_score = s;
      best.assignment = senses;
      best.choices = choice;
      have_best = true;
    }
    // Odometer increment, last position fastest: lexicographic order.
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++choice[i] < targets.positions[i].senses.size()) break;
      choice[i] = 0;
      if (i == 0) return best;
    }
  }
}

GlobalConfiguration brute_force_global(const Document& doc, const Lexicon& lex,
                                       const RelatednessMeasure& measure, std::uint64_t guard) {
  return brute_force_global(build_targets(doc, lex), measure, guard);
}

std::vector<Prediction> to_predictions(const Document& doc, const TargetSequence& targets,
                                       const GlobalConfiguration& global, const Lexicon& lex) {
  std::vector<Prediction> out;
  for (std::size_t j = 0; j < targets.size() && j < global.choices.size(); ++j) {
    const TargetPosition& pos = targets.positions[j];
    const Token& token = doc.tokens[pos.token_index];
    if (!token.instance_id) continue;
    out.push_back({{doc.id, *token.instance_id}, lex.sense_key(pos.senses[global.choices[j]])});
  }
  return out;
}

}  // namespace wsd
