#include "ingest.hpp"

#include <deque>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace gmine {

namespace {

// Buffers records until their after-window is complete, then releases them
// in input order. Peak size is context_window + 1 records.
template <typename T, typename GetRecord>
class Windower {
 public:
  Windower(int window, std::function<void(T &&)> sink, GetRecord get)
      : window_(window), sink_(std::move(sink)), get_(get) {}

  void push(T &&item) {
    SentenceRecord &rec = get_(item);
    rec.before.assign(history_.begin(), history_.end());
    for (T &p : pending_) get_(p).after.push_back(rec.text);
    if (!pending_.empty() &&
        (int)get_(pending_.front()).after.size() >= window_) {
      sink_(std::move(pending_.front()));
      pending_.pop_front();
    }
    history_.push_back(rec.text);
    while ((int)history_.size() > window_) history_.pop_front();
    pending_.push_back(std::move(item));
  }

  void flush() {
    for (T &p : pending_) sink_(std::move(p));
    pending_.clear();
    history_.clear();
  }

 private:
  int window_;
  std::function<void(T &&)> sink_;
  GetRecord get_;
  std::deque<T> pending_;
  std::deque<std::string> history_;
};

std::string extract_ne_label(std::string_view misc) {
  if (misc.empty() || misc == "_") return {};
  for (std::string_view field : split_views(misc, '|')) {
    if (starts_with(field, "Ent=")) {
      std::string_view v = field.substr(4);
      if (!v.empty() && v != "_") return std::string(v);
    }
  }
  return {};
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_ascii_digit(c)) return false;
  return true;
}

}  // namespace

void read_plaintext_stream(std::istream &in, const std::string &source_id,
                           int context_window, const RecordSink &sink,
                           IngestCounters *counters,
                           const ShardDescriptor *shard) {
  IngestCounters local;
  IngestCounters &c = counters ? *counters : local;

  auto get = [](SentenceRecord &r) -> SentenceRecord & { return r; };
  Windower<SentenceRecord, decltype(get)> windower(
      context_window, [&](SentenceRecord &&r) { sink(std::move(r)); }, get);

  size_t doc_ordinal = 0;
  size_t index_in_doc = 0;
  bool doc_open = false;
  bool doc_wanted = true;
  std::string line;

  auto open_doc = [&]() {
    doc_open = true;
    index_in_doc = 0;
    std::string doc_id = "d" + std::to_string(doc_ordinal);
    doc_wanted = !shard || shard->wants_doc(source_id, doc_id);
    if (!doc_wanted) ++c.skipped_docs;
    ++c.documents;
  };
  auto close_doc = [&]() {
    if (!doc_open) return;
    windower.flush();
    doc_open = false;
    ++doc_ordinal;
  };

  while (std::getline(in, line)) {
    ++c.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string text = trim(line);
    if (text.empty()) {
      close_doc();
      continue;
    }
    if (!valid_utf8(text)) {
      ++c.encoding_errors;
      continue;
    }
    if (!doc_open) open_doc();
    if (!doc_wanted) {
      ++index_in_doc;
      continue;
    }
    SentenceRecord rec;
    rec.source_id = source_id;
    rec.doc_id = "d" + std::to_string(doc_ordinal);
    rec.index_in_doc = index_in_doc++;
    rec.text = std::move(text);
    ++c.records;
    windower.push(std::move(rec));
  }
  close_doc();
}

void read_plaintext(const std::string &path, const std::string &source_id,
                    int context_window, const RecordSink &sink,
                    IngestCounters *counters, const ShardDescriptor *shard) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  read_plaintext_stream(in, source_id, context_window, sink, counters, shard);
}

void read_conllu_stream(std::istream &in, const std::string &stream_name,
                        const std::string &source_id, int context_window,
                        const SentenceSink &sink, IngestCounters *counters,
                        const ShardDescriptor *shard,
                        const StringSet *stopwords) {
  IngestCounters local;
  IngestCounters &c = counters ? *counters : local;

  auto get = [](AnnotatedSentence &s) -> SentenceRecord & { return s.record; };
  Windower<AnnotatedSentence, decltype(get)> windower(
      context_window, [&](AnnotatedSentence &&s) { sink(std::move(s)); }, get);

  size_t doc_ordinal = 0;
  size_t index_in_doc = 0;
  size_t sentences_in_doc = 0;
  std::string doc_id = "d0";
  bool doc_counted = false;
  bool doc_wanted = !shard || shard->wants_doc(source_id, doc_id);

  std::string pending_text;
  bool have_text = false;
  std::vector<AnnotatedToken> tokens;
  std::vector<int> raw_heads;  // 0 = root, else 1-based
  bool in_sentence = false;
  size_t line_no = 0;
  std::string line;

  auto reconstruct_text = [&]() {
    std::string t;
    for (size_t i = 0; i < tokens.size(); ++i) {
      t += tokens[i].surface;
      bool no_space = false;
      for (std::string_view f : split_views(tokens[i].misc, '|'))
        if (f == "SpaceAfter=No") no_space = true;
      if (!no_space && i + 1 < tokens.size()) t.push_back(' ');
    }
    return t;
  };

  auto finalize_sentence = [&]() {
    if (!in_sentence) return;
    int roots = 0;
    for (size_t i = 0; i < tokens.size(); ++i) {
      int h = raw_heads[i];
      if (h == 0) {
        tokens[i].head = AnnotatedToken::kRoot;
        ++roots;
      } else {
        if (h < 0 || (size_t)h > tokens.size())
          throw ParseError(stream_name, line_no,
                           "HEAD out of range: " + std::to_string(h));
        tokens[i].head = h - 1;
      }
    }
    if (!tokens.empty() && roots != 1)
      throw ParseError(stream_name, line_no,
                       "expected exactly one root, found " +
                           std::to_string(roots));
    AnnotatedSentence sent;
    sent.record.source_id = source_id;
    sent.record.doc_id = doc_id;
    sent.record.index_in_doc = index_in_doc++;
    sent.record.text = have_text ? pending_text : reconstruct_text();
    sent.tokens = std::move(tokens);
    tokens.clear();
    raw_heads.clear();
    pending_text.clear();
    have_text = false;
    in_sentence = false;
    ++sentences_in_doc;
    if (!doc_counted) {
      ++c.documents;
      if (!doc_wanted) ++c.skipped_docs;
      doc_counted = true;
    }
    if (doc_wanted) {
      ++c.records;
      windower.push(std::move(sent));
    }
  };

  auto start_new_doc = [&](const std::string &explicit_id) {
    finalize_sentence();
    if (sentences_in_doc > 0) {
      windower.flush();
      ++doc_ordinal;
      sentences_in_doc = 0;
      index_in_doc = 0;
      doc_counted = false;
    }
    doc_id = explicit_id.empty() ? "d" + std::to_string(doc_ordinal)
                                 : explicit_id;
    doc_wanted = !shard || shard->wants_doc(source_id, doc_id);
  };

  while (std::getline(in, line)) {
    ++line_no;
    ++c.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finalize_sentence();
      continue;
    }
    if (line[0] == '#') {
      std::string body = trim(line.substr(1));
      if (body == "newdoc" || starts_with(body, "newdoc ") ||
          starts_with(body, "newdoc\t")) {
        std::string id;
        size_t eq = body.find('=');
        if (eq != std::string::npos) id = trim(body.substr(eq + 1));
        start_new_doc(id);
      } else if (starts_with(body, "text")) {
        size_t eq = body.find('=');
        if (eq != std::string::npos) {
          // "# text = " content is verbatim after the first "= ".
          size_t start = line.find('=');
          std::string_view rest = std::string_view(line).substr(start + 1);
          if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
          pending_text = std::string(rest);
          have_text = true;
          in_sentence = true;
        }
      }
      // Other comments (sent_id, ...) carry no structure we keep.
      continue;
    }

    std::vector<std::string_view> cols = split_views(line, '\t');
    if (cols.size() != 10)
      throw ParseError(stream_name, line_no,
                       "expected 10 tab-separated columns, got " +
                           std::to_string(cols.size()));
    std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos) continue;  // multiword range
    if (id.find('.') != std::string_view::npos) continue;  // empty node
    if (!all_digits(id))
      throw ParseError(stream_name, line_no, "bad token id");

    in_sentence = true;
    AnnotatedToken tok;
    tok.surface = std::string(cols[1]);
    tok.lemma = std::string(cols[2]);
    tok.upos = std::string(cols[3]);
    tok.xpos = std::string(cols[4]);
    tok.feats = std::string(cols[5]);
    if (!all_digits(cols[6]))
      throw ParseError(stream_name, line_no, "bad HEAD column");
    raw_heads.push_back((int)std::stol(std::string(cols[6])));
    tok.deprel = std::string(cols[7]);
    tok.deps = std::string(cols[8]);
    tok.misc = std::string(cols[9]);
    tok.ne_label = extract_ne_label(tok.misc);
    tok.lower = to_lower(tok.surface);
    if (stopwords)
      tok.is_stop = stopwords->count(tok.lower) > 0 ||
                    stopwords->count(to_lower(tok.lemma)) > 0;
    tokens.push_back(std::move(tok));
  }
  finalize_sentence();
  windower.flush();
}

void read_conllu(const std::string &path, const std::string &source_id,
                 int context_window, const SentenceSink &sink,
                 IngestCounters *counters, const ShardDescriptor *shard,
                 const StringSet *stopwords) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  read_conllu_stream(in, path, source_id, context_window, sink, counters,
                     shard, stopwords);
}

void write_conllu_sentence(std::ostream &out, const AnnotatedSentence &sent,
                           bool new_doc) {
  if (new_doc) out << "# newdoc id = " << sent.record.doc_id << "\n";
  out << "# sent_id = " << sent.record.index_in_doc << "\n";
  out << "# text = " << sent.record.text << "\n";
  for (size_t i = 0; i < sent.tokens.size(); ++i) {
    const AnnotatedToken &t = sent.tokens[i];
    int head = t.head == AnnotatedToken::kRoot ? 0 : t.head + 1;
    out << (i + 1) << '\t' << t.surface << '\t' << t.lemma << '\t' << t.upos
        << '\t' << t.xpos << '\t' << t.feats << '\t' << head << '\t'
        << t.deprel << '\t' << t.deps << '\t' << t.misc << "\n";
  }
  out << "\n";
}

std::string serialize_conllu(const std::vector<AnnotatedSentence> &sents) {
  std::ostringstream out;
  std::string last_doc;
  bool first = true;
  for (const AnnotatedSentence &s : sents) {
    bool new_doc = first || s.record.doc_id != last_doc;
    write_conllu_sentence(out, s, new_doc);
    last_doc = s.record.doc_id;
    first = false;
  }
  return out.str();
}

std::vector<ManifestEntry> read_manifest(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path);
  std::vector<ManifestEntry> out;
  std::string line;
  size_t line_no = 0;
  // Relative corpus paths resolve against the manifest's directory.
  std::string base;
  size_t slash = path.find_last_of('/');
  if (slash != std::string::npos) base = path.substr(0, slash + 1);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols = split(t, '\t');
    if (cols.size() != 3)
      throw ParseError(path, line_no, "manifest line needs 3 columns");
    if (cols[2] != "plaintext" && cols[2] != "conllu")
      throw ParseError(path, line_no, "unknown format: " + cols[2]);
    std::string p = cols[1];
    if (!p.empty() && p[0] != '/') p = base + p;
    out.push_back({cols[0], p, cols[2]});
  }
  return out;
}

std::vector<ShardDescriptor> shard(const std::vector<ManifestEntry> &manifest,
                                   int n_shards) {
  if (n_shards < 1) throw ConfigError("n_shards must be >= 1");
  std::vector<ShardDescriptor> out;
  out.reserve(n_shards);
  for (int i = 0; i < n_shards; ++i) out.push_back({i, n_shards, manifest});
  return out;
}

}  // namespace gmine
