#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "wsd/cli.hpp"

namespace {

void add_run_options(CLI::App* sub, wsd::RunConfig& cfg) {
  sub->add_option("--lexicon", cfg.lexicon, "WordNet dict directory or toy lexicon file");
  sub->add_option("--input", cfg.input, "Corpus file");
  sub->add_option("--format", cfg.format, "Corpus format: canonical or senseval_xml")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, wsd::CorpusFormat>{{"canonical", wsd::CorpusFormat::canonical},
                                                   {"senseval_xml", wsd::CorpusFormat::senseval_xml}}));
  sub->add_option("--output", cfg.output, "Output file (default: standard output)");
}

void add_measure_options(CLI::App* sub, wsd::RunConfig& cfg) {
  sub->add_option("--measure", cfg.measure, "Relatedness measure: lesk or embeddings")
      ->transform(CLI::CheckedTransformer(std::map<std::string, wsd::MeasureKind>{
          {"lesk", wsd::MeasureKind::lesk}, {"embeddings", wsd::MeasureKind::embeddings}}));
  sub->add_option("--vectors", cfg.vectors, "Word vectors (word2vec format)");
  sub->add_option("--vector-format", cfg.vector_format, "binary or text")
      ->transform(CLI::CheckedTransformer(std::map<std::string, wsd::VectorFormat>{
          {"binary", wsd::VectorFormat::binary}, {"text", wsd::VectorFormat::text}}));
  sub->add_option("--centroid", cfg.centroid, "geometric_median or coordinate_median")
      ->transform(CLI::CheckedTransformer(std::map<std::string, wsd::CentroidMethod>{
          {"geometric_median", wsd::CentroidMethod::geometric_median},
          {"coordinate_median", wsd::CentroidMethod::coordinate_median}}));
  sub->add_option("--stopwords", cfg.stopwords, "Stopword list (default: SMART)");
  sub->add_option("-n,--window-length", cfg.params.n, "Context window length")->capture_default_str();
  sub->add_option("-k,--top-k", cfg.params.k, "Configurations per position in the vote")->capture_default_str();
  sub->add_option("-c,--candidates", cfg.params.c, "Configurations kept per window")->capture_default_str();
  sub->add_option("--workers", cfg.workers, "Window enumeration threads")->capture_default_str();
  sub->add_option("--guard", cfg.guard, "Largest sense product enumerated")->capture_default_str();
  sub->add_option("--max-pool", cfg.max_pool, "Largest configuration pool after assembly")
      ->capture_default_str();
  sub->add_flag("!--no-assembly", cfg.assembly, "Skip suffix/prefix assembly");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ShotgunWSD word sense disambiguation"};
  app.require_subcommand(1);
  wsd::RunConfig cfg;

  auto* dis = app.add_subcommand("disambiguate", "Write a key file of predicted senses");
  add_run_options(dis, cfg);
  add_measure_options(dis, cfg);
  dis->add_flag("--timing", cfg.timing, "Report per-document phase times on standard error");

  auto* eval = app.add_subcommand("evaluate", "Score predictions against a gold key");
  eval->add_option("--predictions", cfg.predictions, "Predicted key file")->required();
  eval->add_option("--key", cfg.key, "Gold key file")->required();
  eval->add_option("--output", cfg.output, "Output file (default: standard output)");

  auto* oracle = app.add_subcommand("oracle", "Compare against exhaustive global search");
  add_run_options(oracle, cfg);
  add_measure_options(oracle, cfg);

  auto* mcs = app.add_subcommand("mcs", "Most common sense baseline key file");
  add_run_options(mcs, cfg);

  auto* sweep = app.add_subcommand("sweep", "F1 and runtime over a grid of n and k");
  add_run_options(sweep, cfg);
  add_measure_options(sweep, cfg);
  sweep->add_option("--key", cfg.key, "Gold key file")->required();
  sweep->add_option("--n-values", cfg.n_values, "Window lengths")->required()->delimiter(',');
  sweep->add_option("--k-values", cfg.k_values, "Voting depths")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (dis->parsed()) cfg.command = wsd::Command::disambiguate;
  if (eval->parsed()) cfg.command = wsd::Command::evaluate;
  if (oracle->parsed()) cfg.command = wsd::Command::oracle;
  if (mcs->parsed()) cfg.command = wsd::Command::mcs;
  if (sweep->parsed()) cfg.command = wsd::Command::sweep;
  return wsd::run_command(cfg, std::cout, std::cerr);
}
