#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "lexicon.hpp"

namespace gmine {

// Stage drivers. Every stage reads and writes files under cfg.out_dir so
// stages compose; run_all chains them and is byte-identical to running the
// stages individually with the same config.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig cfg);

  void run_clean();
  void run_filter();
  void run_score();
  void run_assemble();
  void run_synthesize();
  void run_stats(std::ostream &out);
  void run_all(std::ostream &out);

  const PipelineConfig &config() const { return cfg_; }
  const Lexicon &lexicon();

  // Paths of the stage products inside out_dir.
  std::string cleaned_dir() const;
  std::string cleaned_manifest() const;
  std::string audit_path() const;
  std::string candidates_path() const;
  std::string scored_path() const;
  std::string kb_path() const;
  std::string best_path() const;
  std::string rest_path() const;

 private:
  PipelineConfig cfg_;
  std::optional<Lexicon> lex_;
};

// Runs fn(shard_id) for every shard id on a pool of `workers` threads;
// rethrows the first failure after joining.
void for_each_shard(int shards, int workers,
                    const std::function<void(int)> &fn);

// Concatenates the shard files (in shard-id order) into final_path and
// removes them.
void merge_shard_files(const std::vector<std::string> &shard_paths,
                       const std::string &final_path);

}  // namespace gmine
