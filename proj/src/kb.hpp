#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ingest.hpp"
#include "lexicon.hpp"
#include "rule_engine.hpp"
#include "text_util.hpp"

namespace gmine {

// One knowledge-base record: topical term, sentence, optional leading
// quantifier, confidence score, and surrounding context.
struct KbEntry {
  std::string source;
  std::string term;
  std::optional<std::string> quantifier;
  std::string sentence;
  double score = 0.0;
  std::vector<std::string> before;
  std::vector<std::string> after;
  bool synthesized = false;

  // Provenance, used only for deterministic dedup tie-breaks; not part of
  // the serialized record or of equality.
  std::string doc_id;
  size_t index_in_doc = 0;

  bool operator==(const KbEntry &o) const {
    return source == o.source && term == o.term && quantifier == o.quantifier &&
           sentence == o.sentence && score == o.score && before == o.before &&
           after == o.after && synthesized == o.synthesized;
  }
};

enum class Relation { IsA, HasPart, LocatedAt, UsedFor };
enum class TripleOrigin { ConceptNet, WordNet, TupleKB };

struct Triple {
  std::string subject;
  Relation relation = Relation::IsA;
  std::string object;
  TripleOrigin origin = TripleOrigin::ConceptNet;
};

std::string_view relation_name(Relation r);
std::string_view origin_name(TripleOrigin o);

// One entry per retained sentence; the four streams are aligned by index
// (scores/terms are read only at retained positions).
std::vector<KbEntry> assemble(const std::vector<SentenceRecord> &records,
                              const std::vector<RuleVerdict> &verdicts,
                              const std::vector<double> &scores,
                              const std::vector<std::string> &terms);

// Key: normalized sentence. Keeps the highest-score duplicate; ties fall to
// the lexicographically smallest source, then smallest doc position.
// Idempotent; survivors keep first-appearance order.
std::vector<KbEntry> dedup(const std::vector<KbEntry> &entries);

// best = score strictly above tau, plus every synthesized entry.
std::pair<std::vector<KbEntry>, std::vector<KbEntry>> partition_best(
    const std::vector<KbEntry> &entries, double tau);

// Renders triples whose subject is a best-tier term into short generics
// (score 1.0, synthesized flag set).
std::vector<KbEntry> synthesize(const std::vector<Triple> &triples,
                                const StringSet &best_terms,
                                const Lexicon &lex);

// First-sense isa/haspart triples for the given terms, read off WordNet.
std::vector<Triple> wordnet_triples(const Lexicon &lex,
                                    const StringSet &terms);

// Triples TSV: subject<TAB>relation<TAB>object<TAB>origin.
std::vector<Triple> read_triples(const std::string &path);

enum class KbFormat { Jsonl, Tsv };

// jsonl: one object per line, keys in fixed order (source, term, quantifier,
// sentence, score, before, after, synthesized), scores with 6 decimals,
// UTF-8, LF. tsv: SOURCE/TERM/QUANTIFIER/SENTENCE/SCORE (context omitted).
// `header` prepends "# generics-miner <version>" (omit for bit-exact runs).
void write_kb(const std::vector<KbEntry> &entries, const std::string &path,
              KbFormat format, bool header = false);
std::string serialize_kb_jsonl(const std::vector<KbEntry> &entries,
                               bool header = false);
std::vector<KbEntry> read_kb(const std::string &path);

}  // namespace gmine
