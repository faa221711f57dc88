#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gmine {

enum class ScorerKind { Constant, TableJoin, ExternalProcess };

// Scores sentences on the useful-general-truth criterion. The classifier
// itself lives behind this interface: Constant for smoke tests, TableJoin
// over a precomputed score table, ExternalProcess speaking a line protocol
// (one sentence in, one decimal score out, order-preserving).
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual ScorerKind kind() const = 0;
  // One score per input sentence, same order, clamped to [0, 1].
  virtual std::vector<double> score(const std::vector<std::string> &sentences) = 0;
  virtual size_t misses() const { return 0; }

  static std::unique_ptr<Scorer> constant(double value);
  static std::unique_ptr<Scorer> table_join(const std::string &path,
                                            double default_score = 0.0);
  static std::unique_ptr<Scorer> external(const std::string &command);
  // "constant:<v>" | "table:<path>" | "process:<command>"
  static std::unique_ptr<Scorer> from_spec(const std::string &spec);
};

struct LabeledSentence {
  std::string text;
  double label_a = 0.0;  // each in {1.0, 0.5, 0.0}
  double label_b = 0.0;
  double mean_label() const { return (label_a + label_b) / 2.0; }
};

// Annotation file: TSV "sentence<TAB>label_a<TAB>label_b".
std::vector<LabeledSentence> read_annotations(const std::string &path);

// Bins scores into n_bins equal-width bins, smooths per-bin mean labels
// with isotonic regression (pool adjacent violators, weighted by count),
// and returns the lower edge of the first bin whose smoothed mean reaches
// the target. Throws InsufficientData (< 50 pairs) or
// CalibrationImpossible (no qualifying bin).
double calibrate_threshold(const std::vector<std::pair<double, double>> &pairs,
                           double target, int n_bins = 20);

struct AgreementStats {
  double joint_agreement = 0.0;  // fraction of exact label matches
  double cohens_kappa = 0.0;
};

AgreementStats agreement_stats(const std::vector<double> &labels_a,
                               const std::vector<double> &labels_b);

}  // namespace gmine
