#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kb.hpp"
#include "lexicon.hpp"
#include "text_util.hpp"

namespace gmine {

struct ChainResult {
  size_t s1_id = 0;
  size_t s2_id = 0;
  double score = 0.0;
  std::vector<std::string> link_terms;  // shared by s1/s2, novel w.r.t. Q+A
};

// Overlap weights: first hop is anchored on the answer, second hop on the
// question, plus the hop-to-hop overlap.
struct ChainWeights {
  double answer_s1 = 1.0;
  double question_s2 = 1.0;
  double link = 1.0;
};

// Immutable after build; queries are read-only.
class TermIndex {
 public:
  // Content words: lowercased alphabetic tokens, minus stopwords,
  // singularized (against the lexicon when given, suffix rules otherwise).
  static TermIndex build(std::vector<KbEntry> kb, const StringSet &stopwords,
                         const Lexicon *lex = nullptr,
                         size_t postings_cap = 10000);

  size_t size() const { return entries_.size(); }
  const KbEntry &entry(size_t id) const { return entries_[id]; }
  const std::vector<KbEntry> &entries() const { return entries_; }

  // Top-k entries for a term, by descending score, ties by entry id.
  std::vector<size_t> lookup_term(std::string_view term, size_t k) const;

  // Two-hop chains: s1 drawn from postings of question+answer content
  // words, s2 from postings of s1's content words; scored by weighted
  // Jaccard overlaps; link_terms must be non-empty.
  std::vector<ChainResult> find_chains(const std::string &question,
                                       const std::string &answer, size_t k,
                                       const ChainWeights &weights = {}) const;

  // Uniform sample without replacement, reproducible from seed.
  std::vector<KbEntry> sample(size_t n, uint64_t seed) const;

  std::vector<std::string> content_lemmas(std::string_view text) const;

  const std::map<std::string, std::vector<size_t>> &term_postings() const {
    return by_term_;
  }
  const std::map<std::string, std::vector<size_t>> &token_postings() const {
    return by_token_;
  }

  // Single-file persistence: header (version, counts), sorted term
  // dictionary, postings blocks. Entries travel separately (the KB file).
  void save(const std::string &path) const;
  static TermIndex load(const std::string &path, std::vector<KbEntry> kb,
                        const StringSet &stopwords, const Lexicon *lex = nullptr,
                        size_t postings_cap = 10000);

 private:
  std::vector<KbEntry> entries_;
  std::map<std::string, std::vector<size_t>> by_term_;   // desc score
  std::map<std::string, std::vector<size_t>> by_token_;  // asc id
  std::vector<std::vector<std::string>> entry_lemmas_;   // sorted per entry
  const StringSet *stopwords_ = nullptr;
  const Lexicon *lex_ = nullptr;
  size_t postings_cap_ = 10000;
};

}  // namespace gmine
