#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "text_util.hpp"

namespace gmine {

// One input sentence plus its surrounding-context window.
struct SentenceRecord {
  std::string source_id;
  std::string doc_id;
  size_t index_in_doc = 0;
  std::string text;
  std::vector<std::string> before;
  std::vector<std::string> after;

  std::string sid() const {
    return source_id + ":" + doc_id + ":" + std::to_string(index_in_doc);
  }
};

struct AnnotatedToken {
  static constexpr int kRoot = -1;

  std::string surface;
  std::string lemma;
  std::string upos;
  std::string xpos;
  std::string feats;   // raw FEATS column, "_" when empty
  int head = kRoot;    // index into the owning sentence, kRoot for the root
  std::string deprel;
  std::string deps;    // raw DEPS column
  std::string misc;    // raw MISC column
  std::string ne_label;  // extracted from MISC "Ent=..."
  bool is_stop = false;
  std::string lower;   // cached lowercase surface

  bool operator==(const AnnotatedToken &) const = default;
};

struct AnnotatedSentence {
  SentenceRecord record;
  std::vector<AnnotatedToken> tokens;

  // Index of the first token whose head is kRoot, or -1 when token-less.
  int root_index() const {
    for (size_t i = 0; i < tokens.size(); ++i)
      if (tokens[i].head == AnnotatedToken::kRoot) return (int)i;
    return -1;
  }
};

struct ManifestEntry {
  std::string source_id;
  std::string path;
  std::string format;  // "plaintext" | "conllu"
};

struct ShardDescriptor {
  int shard_id = 0;
  int n_shards = 1;
  std::vector<ManifestEntry> entries;

  bool wants_doc(std::string_view source_id, std::string_view doc_id) const {
    if (n_shards <= 1) return true;
    std::string key;
    key.reserve(source_id.size() + doc_id.size() + 1);
    key.append(source_id);
    key.push_back('\x1f');
    key.append(doc_id);
    return fnv1a64(key) % (uint64_t)n_shards == (uint64_t)shard_id;
  }
};

struct IngestCounters {
  size_t lines = 0;
  size_t documents = 0;
  size_t records = 0;
  size_t encoding_errors = 0;  // invalid UTF-8 lines skipped
  size_t skipped_docs = 0;     // filtered out by shard predicate
};

using RecordSink = std::function<void(SentenceRecord &&)>;
using SentenceSink = std::function<void(AnnotatedSentence &&)>;

// Plaintext corpus: one sentence per line, blank line = document boundary.
// Streaming; peak memory is O(context_window), not file size.
void read_plaintext(const std::string &path, const std::string &source_id,
                    int context_window, const RecordSink &sink,
                    IngestCounters *counters = nullptr,
                    const ShardDescriptor *shard = nullptr);

void read_plaintext_stream(std::istream &in, const std::string &source_id,
                           int context_window, const RecordSink &sink,
                           IngestCounters *counters = nullptr,
                           const ShardDescriptor *shard = nullptr);

// CoNLL-U corpus: 10 tab-separated columns, "# text = ..." per sentence,
// blank-line sentence separator, "# newdoc" document boundaries,
// NE labels in MISC as "Ent=<LABEL>".
void read_conllu(const std::string &path, const std::string &source_id,
                 int context_window, const SentenceSink &sink,
                 IngestCounters *counters = nullptr,
                 const ShardDescriptor *shard = nullptr,
                 const StringSet *stopwords = nullptr);

void read_conllu_stream(std::istream &in, const std::string &stream_name,
                        const std::string &source_id, int context_window,
                        const SentenceSink &sink,
                        IngestCounters *counters = nullptr,
                        const ShardDescriptor *shard = nullptr,
                        const StringSet *stopwords = nullptr);

// Canonical CoNLL-U rendering; parse(serialize(parse(x))) == parse(x).
void write_conllu_sentence(std::ostream &out, const AnnotatedSentence &sent,
                           bool new_doc);
std::string serialize_conllu(const std::vector<AnnotatedSentence> &sents);

// Manifest file: one "source_id<TAB>path<TAB>format" line per corpus.
std::vector<ManifestEntry> read_manifest(const std::string &path);

// Documents are assigned whole to shards by a stable hash of doc_id.
std::vector<ShardDescriptor> shard(const std::vector<ManifestEntry> &manifest,
                                   int n_shards);

}  // namespace gmine
