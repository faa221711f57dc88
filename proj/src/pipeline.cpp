#include "pipeline.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "cleaning.hpp"
#include "errors.hpp"
#include "ingest.hpp"
#include "kb.hpp"
#include "query.hpp"
#include "rule_engine.hpp"
#include "scoring.hpp"
#include "version.hpp"

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace gmine {

void for_each_shard(int shards, int workers,
                    const std::function<void(int)> &fn) {
  if (shards == 1 || workers == 1) {
    for (int s = 0; s < shards; ++s) fn(s);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&]() {
    while (true) {
      int s = next.fetch_add(1);
      if (s >= shards) return;
      try {
        fn(s);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int n = std::min(workers, shards);
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(work);
  for (std::thread &t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

void merge_shard_files(const std::vector<std::string> &shard_paths,
                       const std::string &final_path) {
  std::ofstream out(final_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + final_path);
  for (const std::string &p : shard_paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("missing shard output " + p);
    // Inserting an empty streambuf would set failbit on `out`.
    if (in.peek() != std::ifstream::traits_type::eof()) out << in.rdbuf();
    in.close();
    fs::remove(p);
  }
}

namespace {

struct CleanCounters {
  size_t original = 0;
  size_t cleaned = 0;
  std::map<std::string, size_t> rejected;

  void add(const CleanCounters &o) {
    original += o.original;
    cleaned += o.cleaned;
    for (const auto &[k, v] : o.rejected) rejected[k] += v;
  }
};

struct FilterCounters {
  size_t evaluated = 0;
  size_t retained = 0;

  void add(const FilterCounters &o) {
    evaluated += o.evaluated;
    retained += o.retained;
  }
};

std::string shard_path(const std::string &base, int shard_id) {
  return base + ".shard" + std::to_string(shard_id);
}

void write_counters(const std::string &path, const std::vector<ojson> &lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  for (const ojson &j : lines) out << j.dump() << "\n";
}

std::string json_str(const ojson &j, const char *key) {
  return j.at(key).get<std::string>();
}

}  // namespace

Pipeline::Pipeline(PipelineConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
}

const Lexicon &Pipeline::lexicon() {
  if (!lex_) lex_ = Lexicon::load(cfg_.wordnet_dir, cfg_.wordlists_dir);
  return *lex_;
}

std::string Pipeline::cleaned_dir() const { return cfg_.out_dir + "/cleaned"; }
std::string Pipeline::cleaned_manifest() const {
  return cleaned_dir() + "/manifest.tsv";
}
std::string Pipeline::audit_path() const { return cfg_.out_dir + "/audit.tsv"; }
std::string Pipeline::candidates_path() const {
  return cfg_.out_dir + "/candidates.jsonl";
}
std::string Pipeline::scored_path() const {
  return cfg_.out_dir + "/scored.jsonl";
}
std::string Pipeline::kb_path() const { return cfg_.out_dir + "/kb.jsonl"; }
std::string Pipeline::best_path() const { return cfg_.out_dir + "/best.jsonl"; }
std::string Pipeline::rest_path() const { return cfg_.out_dir + "/rest.jsonl"; }

void Pipeline::run_clean() {
  if (cfg_.manifest.empty()) throw ConfigError("clean needs a manifest");
  std::vector<ManifestEntry> manifest = read_manifest(cfg_.manifest);
  fs::create_directories(cleaned_dir());
  std::vector<LanguageProfile> profiles = load_profiles(cfg_.profiles_dir);
  std::vector<ShardDescriptor> shards = shard(manifest, cfg_.shards);

  std::ofstream cleaned_list(cleaned_manifest(), std::ios::binary);
  if (!cleaned_list) throw IoError("cannot write " + cleaned_manifest());

  std::vector<ojson> counter_lines;
  for (const ManifestEntry &entry : manifest) {
    bool conllu = entry.format == "conllu";
    std::string final_path =
        cleaned_dir() + "/" + entry.source_id + (conllu ? ".conllu" : ".txt");
    std::vector<CleanCounters> per_shard(cfg_.shards);
    std::vector<std::string> shard_files;
    for (int s = 0; s < cfg_.shards; ++s)
      shard_files.push_back(shard_path(final_path, s));

    for_each_shard(cfg_.shards, cfg_.workers, [&](int s) {
      CleanCounters &cc = per_shard[s];
      std::ofstream out(shard_files[s], std::ios::binary);
      if (!out) throw IoError("cannot write " + shard_files[s]);
      std::string last_doc;
      bool wrote_any = false;

      auto keep_text = [&](const std::string &text) {
        CleaningVerdict v = clean_sentence(text, cfg_.limits);
        if (!v.keep) {
          ++cc.rejected[std::string(reject_reason_name(*v.reason))];
          return false;
        }
        LanguageGuess guess = detect_language(text, profiles);
        if (guess.lang != "en" || guess.confidence < cfg_.lang_threshold) {
          ++cc.rejected["NonEnglish"];
          return false;
        }
        return true;
      };

      if (conllu) {
        read_conllu(
            entry.path, entry.source_id, cfg_.context_window,
            [&](AnnotatedSentence &&sent) {
              ++cc.original;
              if (!keep_text(sent.record.text)) return;
              bool new_doc = sent.record.doc_id != last_doc || !wrote_any;
              write_conllu_sentence(out, sent, new_doc);
              last_doc = sent.record.doc_id;
              wrote_any = true;
              ++cc.cleaned;
            },
            nullptr, &shards[s]);
      } else {
        read_plaintext(
            entry.path, entry.source_id, cfg_.context_window,
            [&](SentenceRecord &&rec) {
              ++cc.original;
              std::string text = fix_text(rec.text);
              if (!keep_text(text)) return;
              if (wrote_any && rec.doc_id != last_doc) out << "\n";
              out << text << "\n";
              last_doc = rec.doc_id;
              wrote_any = true;
              ++cc.cleaned;
            },
            nullptr, &shards[s]);
      }
    });

    merge_shard_files(shard_files, final_path);
    CleanCounters total;
    for (const CleanCounters &cc : per_shard) total.add(cc);
    cleaned_list << entry.source_id << '\t'
                 << fs::path(final_path).filename().string() << '\t'
                 << entry.format << "\n";

    ojson j;
    j["stage"] = "clean";
    j["source"] = entry.source_id;
    j["original"] = total.original;
    j["cleaned"] = total.cleaned;
    for (const auto &[reason, count] : total.rejected)
      j["rejected_" + reason] = count;
    counter_lines.push_back(std::move(j));
  }
  write_counters(cfg_.out_dir + "/counters_clean.jsonl", counter_lines);
}

namespace {

std::string degraded_term(const AnnotatedSentence &sent, const Lexicon &lex) {
  for (const AnnotatedToken &t : sent.tokens) {
    std::string word;
    for (char c : t.lower)
      if (is_ascii_alpha(c)) word.push_back(c);
    if (word.empty() || lex.wordlists().stopwords.count(word)) continue;
    return lex.singularize(word);
  }
  return "unknown";
}

}  // namespace

void Pipeline::run_filter() {
  std::string manifest_path = cleaned_manifest();
  if (!fs::exists(manifest_path)) manifest_path = cfg_.manifest;
  if (manifest_path.empty()) throw ConfigError("filter needs a manifest");
  std::vector<ManifestEntry> manifest = read_manifest(manifest_path);

  const Lexicon &lex = lexicon();
  std::vector<Rule> rules = cfg_.ruleset_file.empty()
                                ? default_ruleset()
                                : load_ruleset(cfg_.ruleset_file);
  std::vector<ShardDescriptor> shards = shard(manifest, cfg_.shards);
  fs::create_directories(cfg_.out_dir);

  std::string audit_final = audit_path();
  std::string cand_final = candidates_path();

  std::vector<ojson> counter_lines;
  std::vector<std::string> audit_parts, cand_parts;

  for (const ManifestEntry &entry : manifest) {
    bool conllu = entry.format == "conllu";
    std::vector<FilterCounters> per_shard(cfg_.shards);
    std::vector<std::string> audit_shards, cand_shards;
    for (int s = 0; s < cfg_.shards; ++s) {
      audit_shards.push_back(
          shard_path(audit_final + "." + entry.source_id, s));
      cand_shards.push_back(shard_path(cand_final + "." + entry.source_id, s));
    }

    for_each_shard(cfg_.shards, cfg_.workers, [&](int s) {
      FilterCounters &fc = per_shard[s];
      std::ofstream audit(audit_shards[s], std::ios::binary);
      std::ofstream cand(cand_shards[s], std::ios::binary);
      if (!audit || !cand) throw IoError("cannot write filter shard output");

      auto handle = [&](AnnotatedSentence &&sent, EvalMode mode) {
        ++fc.evaluated;
        RuleVerdict v = evaluate(sent, lex, rules, mode);
        audit << sent.record.sid() << '\t' << (v.retained ? 1 : 0) << '\t'
              << (v.failed_rule ? *v.failed_rule : "-") << '\t'
              << (v.quantifier ? *v.quantifier : "-") << "\n";
        if (!v.retained) return;
        ++fc.retained;
        ojson j;
        j["sid"] = sent.record.sid();
        j["source"] = sent.record.source_id;
        j["doc_id"] = sent.record.doc_id;
        j["index"] = sent.record.index_in_doc;
        j["sentence"] = sent.record.text;
        if (v.quantifier)
          j["quantifier"] = *v.quantifier;
        else
          j["quantifier"] = nullptr;
        j["term"] = mode == EvalMode::Full ? extract_term(sent, lex)
                                           : degraded_term(sent, lex);
        j["mode"] = mode == EvalMode::Full ? "full" : "degraded";
        j["before"] = sent.record.before;
        j["after"] = sent.record.after;
        cand << j.dump() << "\n";
      };

      if (conllu) {
        read_conllu(
            entry.path, entry.source_id, cfg_.context_window,
            [&](AnnotatedSentence &&sent) {
              handle(std::move(sent), EvalMode::Full);
            },
            nullptr, &shards[s], &lex.wordlists().stopwords);
      } else {
        read_plaintext(
            entry.path, entry.source_id, cfg_.context_window,
            [&](SentenceRecord &&rec) {
              handle(degrade(rec), EvalMode::Degraded);
            },
            nullptr, &shards[s]);
      }
    });

    for (int s = 0; s < cfg_.shards; ++s) {
      audit_parts.push_back(audit_shards[s]);
      cand_parts.push_back(cand_shards[s]);
    }
    FilterCounters total;
    for (const FilterCounters &fc : per_shard) total.add(fc);
    ojson j;
    j["stage"] = "filter";
    j["source"] = entry.source_id;
    j["evaluated"] = total.evaluated;
    j["filtered"] = total.retained;
    counter_lines.push_back(std::move(j));
  }

  merge_shard_files(audit_parts, audit_final);
  merge_shard_files(cand_parts, cand_final);
  write_counters(cfg_.out_dir + "/counters_filter.jsonl", counter_lines);
}

void Pipeline::run_score() {
  std::ifstream in(candidates_path(), std::ios::binary);
  if (!in) throw IoError("cannot open " + candidates_path());
  std::ofstream out(scored_path(), std::ios::binary);
  if (!out) throw IoError("cannot write " + scored_path());

  std::unique_ptr<Scorer> scorer = Scorer::from_spec(cfg_.scorer_spec);

  std::vector<ojson> batch;
  std::vector<std::string> sentences;
  size_t scored = 0, line_no = 0;
  std::map<std::string, size_t> per_source;

  auto flush_batch = [&]() {
    if (batch.empty()) return;
    std::vector<double> scores = scorer->score(sentences);
    for (size_t i = 0; i < batch.size(); ++i) {
      batch[i]["score"] = quantize_score(scores[i]);
      out << batch[i].dump() << "\n";
      ++per_source[json_str(batch[i], "source")];
      ++scored;
    }
    out.flush();  // keep partial output on scorer failure
    batch.clear();
    sentences.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    ojson j;
    try {
      j = ojson::parse(line);
    } catch (const nlohmann::json::exception &ex) {
      throw ParseError(candidates_path(), line_no, ex.what());
    }
    sentences.push_back(json_str(j, "sentence"));
    batch.push_back(std::move(j));
    if (batch.size() >= 4096) flush_batch();
  }
  flush_batch();

  std::vector<ojson> counter_lines;
  for (const auto &[source, n] : per_source) {
    ojson j;
    j["stage"] = "score";
    j["source"] = source;
    j["scored"] = n;
    counter_lines.push_back(std::move(j));
  }
  ojson meta;
  meta["stage"] = "score";
  meta["source"] = "*";
  meta["scored"] = scored;
  meta["table_misses"] = scorer->misses();
  counter_lines.push_back(std::move(meta));
  write_counters(cfg_.out_dir + "/counters_score.jsonl", counter_lines);
}

void Pipeline::run_assemble() {
  std::ifstream in(scored_path(), std::ios::binary);
  if (!in) throw IoError("cannot open " + scored_path());

  std::vector<SentenceRecord> records;
  std::vector<RuleVerdict> verdicts;
  std::vector<double> scores;
  std::vector<std::string> terms;

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    ojson j;
    try {
      j = ojson::parse(line);
    } catch (const nlohmann::json::exception &ex) {
      throw ParseError(scored_path(), line_no, ex.what());
    }
    SentenceRecord rec;
    rec.source_id = json_str(j, "source");
    rec.doc_id = json_str(j, "doc_id");
    rec.index_in_doc = j.at("index").get<size_t>();
    rec.text = json_str(j, "sentence");
    rec.before = j.at("before").get<std::vector<std::string>>();
    rec.after = j.at("after").get<std::vector<std::string>>();
    records.push_back(std::move(rec));

    RuleVerdict v;
    v.retained = true;
    if (!j.at("quantifier").is_null())
      v.quantifier = json_str(j, "quantifier");
    verdicts.push_back(std::move(v));
    scores.push_back(j.at("score").get<double>());
    terms.push_back(json_str(j, "term"));
  }

  std::vector<KbEntry> entries = assemble(records, verdicts, scores, terms);
  size_t assembled = entries.size();
  entries = dedup(entries);
  write_kb(entries, kb_path(), KbFormat::Jsonl, !cfg_.strict);

  std::map<std::string, size_t> per_source;
  for (const KbEntry &e : entries) ++per_source[e.source];
  std::vector<ojson> counter_lines;
  for (const auto &[source, n] : per_source) {
    ojson j;
    j["stage"] = "assemble";
    j["source"] = source;
    j["entries"] = n;
    counter_lines.push_back(std::move(j));
  }
  ojson meta;
  meta["stage"] = "assemble";
  meta["source"] = "*";
  meta["assembled"] = assembled;
  meta["after_dedup"] = entries.size();
  counter_lines.push_back(std::move(meta));
  write_counters(cfg_.out_dir + "/counters_assemble.jsonl", counter_lines);
}

void Pipeline::run_synthesize() {
  std::vector<KbEntry> kb = read_kb(kb_path());
  auto [best, rest] = partition_best(kb, cfg_.tau);

  StringSet best_terms;
  for (const KbEntry &e : best)
    if (!e.synthesized) best_terms.insert(e.term);

  const Lexicon &lex = lexicon();
  std::vector<Triple> triples;
  if (!cfg_.triples_file.empty()) {
    std::vector<Triple> file_triples = read_triples(cfg_.triples_file);
    triples.insert(triples.end(), file_triples.begin(), file_triples.end());
  }
  if (cfg_.synth_wordnet) {
    std::vector<Triple> wn = wordnet_triples(lex, best_terms);
    triples.insert(triples.end(), wn.begin(), wn.end());
  }

  std::vector<KbEntry> synth = dedup(synthesize(triples, best_terms, lex));
  std::vector<KbEntry> best_all = best;
  best_all.insert(best_all.end(), synth.begin(), synth.end());

  write_kb(best_all, best_path(), KbFormat::Jsonl, !cfg_.strict);
  write_kb(rest, rest_path(), KbFormat::Jsonl, !cfg_.strict);

  std::map<std::string, size_t> per_source;
  for (const KbEntry &e : best_all) ++per_source[e.source];
  std::vector<ojson> counter_lines;
  for (const auto &[source, n] : per_source) {
    ojson j;
    j["stage"] = "synthesize";
    j["source"] = source;
    j["best"] = n;
    counter_lines.push_back(std::move(j));
  }
  ojson meta;
  meta["stage"] = "synthesize";
  meta["source"] = "*";
  meta["best_total"] = best_all.size();
  meta["synthesized"] = synth.size();
  meta["rest"] = rest.size();
  counter_lines.push_back(std::move(meta));
  write_counters(cfg_.out_dir + "/counters_synthesize.jsonl", counter_lines);
}

void Pipeline::run_stats(std::ostream &out) {
  struct Row {
    size_t original = 0, cleaned = 0, filtered = 0, best = 0;
  };
  std::map<std::string, Row> rows;

  for (const char *stage : {"clean", "filter", "synthesize"}) {
    std::string path =
        cfg_.out_dir + "/counters_" + stage + ".jsonl";
    std::ifstream in(path, std::ios::binary);
    if (!in) continue;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ojson j = ojson::parse(line);
      std::string source = json_str(j, "source");
      if (source == "*") continue;
      Row &r = rows[source];
      if (j.contains("original")) r.original += j.at("original").get<size_t>();
      if (j.contains("cleaned")) r.cleaned += j.at("cleaned").get<size_t>();
      if (j.contains("filtered")) r.filtered += j.at("filtered").get<size_t>();
      if (j.contains("best")) r.best += j.at("best").get<size_t>();
    }
  }

  Row total;
  for (const auto &[source, r] : rows) {
    total.original += r.original;
    total.cleaned += r.cleaned;
    total.filtered += r.filtered;
    total.best += r.best;
  }

  std::ostringstream table;
  table << std::left << std::setw(16) << "SOURCE" << std::right
        << std::setw(12) << "ORIGINAL" << std::setw(12) << "CLEANED"
        << std::setw(12) << "FILTERED" << std::setw(12) << "BEST"
        << std::setw(16) << "FILTERED/CLEAN" << "\n";
  auto emit = [&](const std::string &name, const Row &r) {
    double ratio = r.cleaned ? (double)r.filtered / (double)r.cleaned : 0.0;
    table << std::left << std::setw(16) << name << std::right << std::setw(12)
          << r.original << std::setw(12) << r.cleaned << std::setw(12)
          << r.filtered << std::setw(12) << r.best << std::setw(16)
          << std::fixed << std::setprecision(4) << ratio << "\n";
    table.unsetf(std::ios::fixed);
  };
  for (const auto &[source, r] : rows) emit(source, r);
  emit("TOTAL", total);
  out << table.str();

  std::ofstream txt(cfg_.out_dir + "/stats.txt", std::ios::binary);
  txt << table.str();
  std::ofstream jl(cfg_.out_dir + "/stats.jsonl", std::ios::binary);
  auto emit_json = [&](const std::string &name, const Row &r) {
    ojson j;
    j["source"] = name;
    j["original"] = r.original;
    j["cleaned"] = r.cleaned;
    j["filtered"] = r.filtered;
    j["best"] = r.best;
    double ratio = r.cleaned ? (double)r.filtered / (double)r.cleaned : 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", ratio);
    j["filtered_over_cleaned"] = buf;
    jl << j.dump() << "\n";
  };
  for (const auto &[source, r] : rows) emit_json(source, r);
  emit_json("TOTAL", total);
}

void Pipeline::run_all(std::ostream &out) {
  run_clean();
  run_filter();
  run_score();
  run_assemble();
  run_synthesize();
  run_stats(out);
}

}  // namespace gmine
