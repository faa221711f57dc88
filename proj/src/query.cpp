#include "query.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "errors.hpp"

namespace gmine {

namespace {

std::string naive_singular(const std::string &w) {
  size_t n = w.size();
  if (n > 4 && ends_with(w, "ies")) return w.substr(0, n - 3) + "y";
  if (n > 4 && (ends_with(w, "ches") || ends_with(w, "shes") ||
                ends_with(w, "xes") || ends_with(w, "zes") ||
                ends_with(w, "sses")))
    return w.substr(0, n - 2);
  if (n > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us"))
    return w.substr(0, n - 1);
  return w;
}

double jaccard(const std::vector<std::string> &a,
               const std::vector<std::string> &b) {
  if (a.empty() && b.empty()) return 0.0;
  size_t inter = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = a[i].compare(b[j]);
    if (c == 0) {
      ++inter;
      ++i;
      ++j;
    } else if (c < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : (double)inter / (double)uni;
}

}  // namespace

std::vector<std::string> TermIndex::content_lemmas(std::string_view text) const {
  std::vector<std::string> out;
  std::string word;
  auto flush = [&]() {
    if (word.empty()) return;
    if (!stopwords_ || !stopwords_->count(word)) {
      std::string lemma = lex_ ? lex_->singularize(word) : naive_singular(word);
      out.push_back(std::move(lemma));
    }
    word.clear();
  };
  for (char c : text) {
    if (is_ascii_alpha(c))
      word.push_back(ascii_lower(c));
    else
      flush();
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TermIndex TermIndex::build(std::vector<KbEntry> kb, const StringSet &stopwords,
                           const Lexicon *lex, size_t postings_cap) {
  TermIndex idx;
  idx.entries_ = std::move(kb);
  idx.stopwords_ = &stopwords;
  idx.lex_ = lex;
  idx.postings_cap_ = postings_cap;
  idx.entry_lemmas_.resize(idx.entries_.size());

  for (size_t id = 0; id < idx.entries_.size(); ++id) {
    const KbEntry &e = idx.entries_[id];
    idx.by_term_[e.term].push_back(id);
    idx.entry_lemmas_[id] = idx.content_lemmas(e.sentence);
    for (const std::string &lemma : idx.entry_lemmas_[id])
      idx.by_token_[lemma].push_back(id);
  }
  for (auto &[term, ids] : idx.by_term_) {
    std::sort(ids.begin(), ids.end(), [&](size_t a, size_t b) {
      if (idx.entries_[a].score != idx.entries_[b].score)
        return idx.entries_[a].score > idx.entries_[b].score;
      return a < b;
    });
  }
  // by_token postings are already ascending by construction.
  return idx;
}

std::vector<size_t> TermIndex::lookup_term(std::string_view term,
                                           size_t k) const {
  if (k < 1) throw ConfigError("lookup_term needs k >= 1");
  std::string key = to_lower(term);
  if (lex_) key = lex_->singularize(key);
  auto it = by_term_.find(key);
  if (it == by_term_.end()) return {};
  std::vector<size_t> out = it->second;
  if (out.size() > k) out.resize(k);
  return out;
}

std::vector<ChainResult> TermIndex::find_chains(const std::string &question,
                                                const std::string &answer,
                                                size_t k,
                                                const ChainWeights &w) const {
  if (trim(question).empty()) throw EmptyInput("question");
  if (trim(answer).empty()) throw EmptyInput("answer");

  std::vector<std::string> q_lemmas = content_lemmas(question);
  std::vector<std::string> a_lemmas = content_lemmas(answer);
  std::vector<std::string> qa;
  std::set_union(q_lemmas.begin(), q_lemmas.end(), a_lemmas.begin(),
                 a_lemmas.end(), std::back_inserter(qa));

  auto postings_for = [&](const std::string &lemma,
                          std::vector<size_t> &out) {
    auto it = by_token_.find(lemma);
    if (it == by_token_.end()) return;
    const std::vector<size_t> *ids = &it->second;
    std::vector<size_t> capped;
    if (ids->size() > postings_cap_) {
      capped = *ids;
      std::sort(capped.begin(), capped.end(), [&](size_t a, size_t b) {
        if (entries_[a].score != entries_[b].score)
          return entries_[a].score > entries_[b].score;
        return a < b;
      });
      capped.resize(postings_cap_);
      std::sort(capped.begin(), capped.end());
      ids = &capped;
    }
    out.insert(out.end(), ids->begin(), ids->end());
  };

  std::vector<size_t> s1_candidates;
  for (const std::string &lemma : qa) postings_for(lemma, s1_candidates);
  std::sort(s1_candidates.begin(), s1_candidates.end());
  s1_candidates.erase(std::unique(s1_candidates.begin(), s1_candidates.end()),
                      s1_candidates.end());

  std::vector<ChainResult> results;
  for (size_t s1 : s1_candidates) {
    const std::vector<std::string> &w1 = entry_lemmas_[s1];
    std::vector<size_t> s2_candidates;
    for (const std::string &lemma : w1) postings_for(lemma, s2_candidates);
    std::sort(s2_candidates.begin(), s2_candidates.end());
    s2_candidates.erase(
        std::unique(s2_candidates.begin(), s2_candidates.end()),
        s2_candidates.end());

    for (size_t s2 : s2_candidates) {
      if (s2 == s1) continue;
      const std::vector<std::string> &w2 = entry_lemmas_[s2];
      std::vector<std::string> shared;
      std::set_intersection(w1.begin(), w1.end(), w2.begin(), w2.end(),
                            std::back_inserter(shared));
      std::vector<std::string> link;
      std::set_difference(shared.begin(), shared.end(), qa.begin(), qa.end(),
                          std::back_inserter(link));
      if (link.empty()) continue;  // must introduce a novel linking concept

      ChainResult r;
      r.s1_id = s1;
      r.s2_id = s2;
      r.link_terms = std::move(link);
      r.score = w.answer_s1 * jaccard(a_lemmas, w1) +
                w.question_s2 * jaccard(q_lemmas, w2) +
                w.link * jaccard(w1, w2);
      results.push_back(std::move(r));
    }
  }

  std::sort(results.begin(), results.end(),
            [](const ChainResult &a, const ChainResult &b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.s1_id != b.s1_id) return a.s1_id < b.s1_id;
              return a.s2_id < b.s2_id;
            });
  if (results.size() > k) results.resize(k);
  return results;
}

std::vector<KbEntry> TermIndex::sample(size_t n, uint64_t seed) const {
  if (n > entries_.size())
    throw InsufficientEntries("sample of " + std::to_string(n) + " from " +
                              std::to_string(entries_.size()));
  std::mt19937_64 rng(seed);
  std::vector<size_t> ids(entries_.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::vector<KbEntry> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<size_t> pick(i, ids.size() - 1);
    std::swap(ids[i], ids[pick(rng)]);
    out.push_back(entries_[ids[i]]);
  }
  return out;
}

namespace {

void put_u64(std::ofstream &out, uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = (unsigned char)(v >> (8 * i));
  out.write((const char *)buf, 8);
}

uint64_t get_u64(std::ifstream &in, const std::string &path) {
  unsigned char buf[8];
  in.read((char *)buf, 8);
  if (!in) throw ParseError(path, 0, "truncated index file");
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= (uint64_t)buf[i] << (8 * i);
  return v;
}

void put_str(std::ofstream &out, const std::string &s) {
  put_u64(out, s.size());
  out.write(s.data(), (std::streamsize)s.size());
}

std::string get_str(std::ifstream &in, const std::string &path) {
  uint64_t n = get_u64(in, path);
  std::string s(n, '\0');
  in.read(s.data(), (std::streamsize)n);
  if (!in) throw ParseError(path, 0, "truncated index file");
  return s;
}

void put_postings(std::ofstream &out,
                  const std::map<std::string, std::vector<size_t>> &dict) {
  put_u64(out, dict.size());
  for (const auto &[key, ids] : dict) {
    put_str(out, key);
    put_u64(out, ids.size());
    for (size_t id : ids) put_u64(out, id);
  }
}

void get_postings(std::ifstream &in, const std::string &path,
                  std::map<std::string, std::vector<size_t>> &dict) {
  uint64_t n = get_u64(in, path);
  for (uint64_t i = 0; i < n; ++i) {
    std::string key = get_str(in, path);
    uint64_t m = get_u64(in, path);
    std::vector<size_t> ids(m);
    for (uint64_t j = 0; j < m; ++j) ids[j] = get_u64(in, path);
    dict.emplace(std::move(key), std::move(ids));
  }
}

constexpr uint64_t kIndexMagic = 0x31584947454e4947ull;  // "GINEGIX1"

}  // namespace

void TermIndex::save(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write index " + path);
  put_u64(out, kIndexMagic);
  put_u64(out, 1);  // format version
  put_u64(out, entries_.size());
  put_postings(out, by_term_);
  put_postings(out, by_token_);
}

TermIndex TermIndex::load(const std::string &path, std::vector<KbEntry> kb,
                          const StringSet &stopwords, const Lexicon *lex,
                          size_t postings_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open index " + path);
  if (get_u64(in, path) != kIndexMagic)
    throw ParseError(path, 0, "not an index file");
  if (get_u64(in, path) != 1)
    throw ParseError(path, 0, "unsupported index version");
  uint64_t n = get_u64(in, path);
  if (n != kb.size())
    throw ShapeError("index holds " + std::to_string(n) + " entries, kb has " +
                     std::to_string(kb.size()));

  TermIndex idx;
  idx.entries_ = std::move(kb);
  idx.stopwords_ = &stopwords;
  idx.lex_ = lex;
  idx.postings_cap_ = postings_cap;
  get_postings(in, path, idx.by_term_);
  get_postings(in, path, idx.by_token_);

  idx.entry_lemmas_.resize(idx.entries_.size());
  for (const auto &[lemma, ids] : idx.by_token_)
    for (size_t id : ids) {
      if (id >= idx.entries_.size())
        throw ParseError(path, 0, "posting id out of range");
      idx.entry_lemmas_[id].push_back(lemma);
    }
  for (auto &lemmas : idx.entry_lemmas_) std::sort(lemmas.begin(), lemmas.end());
  return idx;
}

}  // namespace gmine
