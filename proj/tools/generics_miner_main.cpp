#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "config.hpp"
#include "errors.hpp"
#include "kb.hpp"
#include "pipeline.hpp"
#include "query.hpp"
#include "scoring.hpp"
#include "text_util.hpp"
#include "version.hpp"

using namespace gmine;

namespace {

struct CliOptions {
  std::string config_file;
  PipelineConfig overrides;
  std::vector<std::pair<std::string, std::string>> kv;  // key, value
  bool print_config = false;

  // query/chains/sample/calibrate inputs
  std::string kb_file;
  std::string term;
  std::string question, answer;
  std::string annotations;
  std::string index_file, save_index;
  size_t k = 10;
  size_t n = 10;
  double target = 0.5;
};

PipelineConfig resolve_config(const CliOptions &opt) {
  PipelineConfig cfg = opt.config_file.empty()
                           ? PipelineConfig()
                           : PipelineConfig::from_file(opt.config_file);
  for (const auto &[key, value] : opt.kv) cfg.apply(key, value);
  cfg.validate();
  return cfg;
}

void print_entries(const TermIndex &index, const std::vector<size_t> &ids) {
  for (size_t id : ids) {
    const KbEntry &e = index.entry(id);
    std::cout << format_score(e.score) << '\t' << e.term << '\t'
              << (e.quantifier ? *e.quantifier : "-") << '\t' << e.sentence
              << "\n";
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"generics-miner: builds and queries a knowledge base of "
               "generic statements mined from text corpora"};
  app.set_version_flag("--version", std::string("generics-miner ") + kVersion);
  app.require_subcommand(0, 1);
  app.fallthrough();  // global flags may follow the subcommand

  CliOptions opt;
  app.add_option("--config", opt.config_file, "flat key=value config file");
  app.add_flag("--print-config", opt.print_config,
               "print the resolved configuration and exit");

  // Every config key is also a flag; flags win over the config file.
  auto add_kv = [&](const std::string &flag, const std::string &key,
                    const std::string &help) {
    app.add_option_function<std::string>(
        flag,
        [&opt, key](const std::string &v) { opt.kv.emplace_back(key, v); },
        help);
  };
  add_kv("--manifest", "manifest", "corpus manifest (source\\tpath\\tformat)");
  add_kv("--out", "out_dir", "output directory for stage products");
  add_kv("--context-window", "context_window", "context sentences per side");
  add_kv("--wordnet", "wordnet_dir", "WordNet database directory");
  add_kv("--wordlists", "wordlists_dir", "word list directory");
  add_kv("--profiles", "profiles_dir", "language profile directory");
  add_kv("--ruleset", "ruleset", "rule toggle file");
  add_kv("--scorer", "scorer", "constant:<v> | table:<path> | process:<cmd>");
  add_kv("--tau", "tau", "best-tier score threshold");
  add_kv("--triples", "triples", "triples TSV for synthesis");
  add_kv("--workers", "workers", "worker threads");
  add_kv("--shards", "shards", "shard count (fixes output, not thread count)");
  add_kv("--seed", "seed", "seed for all randomness");
  app.add_flag_function(
      "--strict",
      [&opt](int64_t) { opt.kv.emplace_back("strict", "true"); },
      "omit version header comments for bit-exact output");
  app.add_flag_function(
      "--from-wordnet",
      [&opt](int64_t) { opt.kv.emplace_back("synth_wordnet", "true"); },
      "derive isa/haspart triples from WordNet during synthesis");

  CLI::App *cmd_clean = app.add_subcommand("clean", "clean raw corpora");
  CLI::App *cmd_filter =
      app.add_subcommand("filter", "apply the lexico-syntactic rules");
  CLI::App *cmd_score = app.add_subcommand("score", "score retained sentences");
  CLI::App *cmd_assemble =
      app.add_subcommand("assemble", "assemble and dedup the knowledge base");
  CLI::App *cmd_synth = app.add_subcommand(
      "synthesize", "partition the best tier and synthesize short generics");
  CLI::App *cmd_stats = app.add_subcommand("stats", "per-source stage counts");
  CLI::App *cmd_run_all =
      app.add_subcommand("run-all", "clean through stats in one run");

  CLI::App *cmd_query = app.add_subcommand("query", "look up a term");
  cmd_query->add_option("--kb", opt.kb_file, "kb jsonl file")->required();
  cmd_query->add_option("--term", opt.term, "term to look up")->required();
  cmd_query->add_option("-k,--k", opt.k, "max results");
  cmd_query->add_option("--index", opt.index_file, "load a saved index");
  cmd_query->add_option("--save-index", opt.save_index,
                        "write the index to this file");

  CLI::App *cmd_chains =
      app.add_subcommand("chains", "two-hop explanation chains");
  cmd_chains->add_option("--kb", opt.kb_file, "kb jsonl file")->required();
  cmd_chains->add_option("--question", opt.question, "question text")
      ->required();
  cmd_chains->add_option("--answer", opt.answer, "answer text")->required();
  cmd_chains->add_option("-k,--k", opt.k, "max chains");
  cmd_chains->add_option("--index", opt.index_file, "load a saved index");

  CLI::App *cmd_sample = app.add_subcommand("sample", "random sample of a kb");
  cmd_sample->add_option("--kb", opt.kb_file, "kb jsonl file")->required();
  cmd_sample->add_option("-n,--n", opt.n, "sample size");

  CLI::App *cmd_calibrate = app.add_subcommand(
      "calibrate", "calibrate the best-tier threshold from annotations");
  cmd_calibrate->add_option("--annotations", opt.annotations,
                            "TSV sentence\\tlabel_a\\tlabel_b")
      ->required();
  cmd_calibrate->add_option("--target", opt.target,
                            "target mean annotator label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    PipelineConfig cfg = resolve_config(opt);
    if (opt.print_config) {
      std::cout << cfg.print();
      return 0;
    }

    if (*cmd_clean || *cmd_filter || *cmd_score || *cmd_assemble ||
        *cmd_synth || *cmd_stats || *cmd_run_all) {
      Pipeline pipeline(cfg);
      if (*cmd_clean) pipeline.run_clean();
      else if (*cmd_filter) pipeline.run_filter();
      else if (*cmd_score) pipeline.run_score();
      else if (*cmd_assemble) pipeline.run_assemble();
      else if (*cmd_synth) pipeline.run_synthesize();
      else if (*cmd_stats) pipeline.run_stats(std::cout);
      else pipeline.run_all(std::cout);
      return 0;
    }

    if (*cmd_query || *cmd_chains || *cmd_sample) {
      Lexicon lex = Lexicon::load(cfg.wordnet_dir, cfg.wordlists_dir);
      std::vector<KbEntry> kb = read_kb(opt.kb_file);
      TermIndex index =
          opt.index_file.empty()
              ? TermIndex::build(std::move(kb), lex.wordlists().stopwords,
                                 &lex, cfg.postings_cap)
              : TermIndex::load(opt.index_file, std::move(kb),
                                lex.wordlists().stopwords, &lex,
                                cfg.postings_cap);
      if (*cmd_query) {
        if (!opt.save_index.empty()) index.save(opt.save_index);
        print_entries(index, index.lookup_term(opt.term, opt.k));
      } else if (*cmd_chains) {
        for (const ChainResult &c : index.find_chains(
                 opt.question, opt.answer, opt.k, cfg.chain_weights)) {
          std::string links;
          for (const std::string &t : c.link_terms) {
            if (!links.empty()) links += ",";
            links += t;
          }
          std::cout << format_score(c.score) << '\t'
                    << index.entry(c.s1_id).sentence << '\t'
                    << index.entry(c.s2_id).sentence << '\t' << links << "\n";
        }
      } else {
        std::cout << serialize_kb_jsonl(index.sample(opt.n, cfg.seed), false);
      }
      return 0;
    }

    if (*cmd_calibrate) {
      std::vector<LabeledSentence> ann = read_annotations(opt.annotations);
      std::vector<std::string> sentences;
      for (const LabeledSentence &a : ann) sentences.push_back(a.text);
      std::unique_ptr<Scorer> scorer = Scorer::from_spec(cfg.scorer_spec);
      std::vector<double> scores = scorer->score(sentences);
      std::vector<std::pair<double, double>> pairs;
      for (size_t i = 0; i < ann.size(); ++i)
        pairs.emplace_back(scores[i], ann[i].mean_label());
      double tau = calibrate_threshold(pairs, opt.target);
      std::printf("%.6f\n", tau);
      return 0;
    }

    std::cout << app.help();
    return 0;
  } catch (const Error &e) {
    std::cerr << "generics-miner: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "generics-miner: unexpected: " << e.what() << "\n";
    return 2;
  }
}
