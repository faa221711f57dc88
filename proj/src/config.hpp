#pragma once

#include <cstdint>
#include <string>

#include "cleaning.hpp"
#include "query.hpp"

namespace gmine {

// Flat key=value config; command-line flags override file values.
struct PipelineConfig {
  std::string manifest;
  std::string out_dir = "out";
  int context_window = 2;

  CleaningLimits limits;
  double lang_threshold = 0.5;

  std::string wordnet_dir = "data/wordnet";
  std::string wordlists_dir = "data/wordlists";
  std::string profiles_dir = "data/profiles";
  std::string ruleset_file;  // empty = full default ruleset

  std::string scorer_spec = "constant:0.5";
  double tau = 0.23;

  std::string triples_file;
  bool synth_wordnet = false;

  int workers = 1;
  int shards = 4;
  uint64_t seed = 0;
  bool strict = false;  // omit version header comments in outputs

  size_t postings_cap = 10000;
  ChainWeights chain_weights;

  void apply(const std::string &key, const std::string &value);
  static PipelineConfig from_file(const std::string &path);
  std::string print() const;
  void validate() const;
};

}  // namespace gmine
