#include "kb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "errors.hpp"
#include "version.hpp"

namespace gmine {

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::IsA: return "IsA";
    case Relation::HasPart: return "HasPart";
    case Relation::LocatedAt: return "LocatedAt";
    case Relation::UsedFor: return "UsedFor";
  }
  return "?";
}

std::string_view origin_name(TripleOrigin o) {
  switch (o) {
    case TripleOrigin::ConceptNet: return "conceptnet";
    case TripleOrigin::WordNet: return "wordnet";
    case TripleOrigin::TupleKB: return "tuplekb";
  }
  return "?";
}

std::vector<KbEntry> assemble(const std::vector<SentenceRecord> &records,
                              const std::vector<RuleVerdict> &verdicts,
                              const std::vector<double> &scores,
                              const std::vector<std::string> &terms) {
  if (records.size() != verdicts.size() || records.size() != scores.size() ||
      records.size() != terms.size())
    throw ShapeError("assemble streams are not aligned");

  std::vector<KbEntry> out;
  for (size_t i = 0; i < records.size(); ++i) {
    if (!verdicts[i].retained) continue;
    KbEntry e;
    e.source = records[i].source_id;
    e.term = terms[i];
    e.quantifier = verdicts[i].quantifier;
    e.sentence = records[i].text;
    e.score = quantize_score(scores[i]);
    e.before = records[i].before;
    e.after = records[i].after;
    e.synthesized = false;
    e.doc_id = records[i].doc_id;
    e.index_in_doc = records[i].index_in_doc;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// True when `a` wins the duplicate group over `b`.
bool better_duplicate(const KbEntry &a, const KbEntry &b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.source != b.source) return a.source < b.source;
  if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
  return a.index_in_doc < b.index_in_doc;
}

}  // namespace

std::vector<KbEntry> dedup(const std::vector<KbEntry> &entries) {
  std::unordered_map<std::string, size_t> winner;  // key -> index in entries
  std::vector<std::string> key_order;
  for (size_t i = 0; i < entries.size(); ++i) {
    std::string key = normalize_sentence_key(entries[i].sentence);
    auto it = winner.find(key);
    if (it == winner.end()) {
      winner.emplace(key, i);
      key_order.push_back(std::move(key));
    } else if (better_duplicate(entries[i], entries[it->second])) {
      it->second = i;
    }
  }
  std::vector<KbEntry> out;
  out.reserve(key_order.size());
  for (const std::string &key : key_order) out.push_back(entries[winner[key]]);
  return out;
}

std::pair<std::vector<KbEntry>, std::vector<KbEntry>> partition_best(
    const std::vector<KbEntry> &entries, double tau) {
  std::vector<KbEntry> best, rest;
  for (const KbEntry &e : entries) {
    if (e.synthesized || e.score > tau)
      best.push_back(e);
    else
      rest.push_back(e);
  }
  return {std::move(best), std::move(rest)};
}

namespace {

std::string article_for(std::string_view word) {
  if (word.empty()) return "a";
  char c = ascii_lower(word[0]);
  return (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') ? "an"
                                                                    : "a";
}

std::string surface_form(std::string_view lemma) {
  std::string out(lemma);
  for (char &c : out)
    if (c == '_') c = ' ';
  return out;
}

std::string render_triple(const Triple &t) {
  std::string subj = surface_form(t.subject);
  std::string obj = surface_form(t.object);
  std::string s;
  switch (t.relation) {
    case Relation::IsA:
      s = article_for(subj) + " " + subj + " is " + article_for(obj) + " " +
          obj + ".";
      break;
    case Relation::HasPart:
      s = article_for(subj) + " " + subj + " has " + article_for(obj) + " " +
          obj + ".";
      break;
    case Relation::LocatedAt:
      s = article_for(subj) + " " + subj + " can be found in " +
          article_for(obj) + " " + obj + ".";
      break;
    case Relation::UsedFor:
      s = article_for(subj) + " " + subj + " is used for " + obj + ".";
      break;
  }
  s[0] = ascii_upper(s[0]);
  return s;
}

}  // namespace

std::vector<KbEntry> synthesize(const std::vector<Triple> &triples,
                                const StringSet &best_terms,
                                const Lexicon &lex) {
  std::vector<KbEntry> out;
  for (const Triple &t : triples) {
    std::string subject = lex.singularize(to_lower(t.subject));
    if (!best_terms.count(subject)) continue;
    KbEntry e;
    e.source = std::string(origin_name(t.origin));
    e.term = subject;
    e.sentence = render_triple(t);
    e.score = 1.0;
    e.synthesized = true;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Triple> wordnet_triples(const Lexicon &lex,
                                    const StringSet &terms) {
  std::vector<std::string> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Triple> out;
  for (const std::string &term : sorted) {
    const Synset *s = lex.first_sense(term, Pos::Noun);
    if (!s) continue;
    for (const std::string &id : s->hypernyms) {
      const Synset *t = lex.synset(id);
      if (t && !t->lemmas.empty())
        out.push_back({term, Relation::IsA, t->lemmas.front(),
                       TripleOrigin::WordNet});
    }
    for (const std::string &id : s->part_meronyms) {
      const Synset *t = lex.synset(id);
      if (t && !t->lemmas.empty())
        out.push_back({term, Relation::HasPart, t->lemmas.front(),
                       TripleOrigin::WordNet});
    }
  }
  return out;
}

std::vector<Triple> read_triples(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open triples " + path);
  std::vector<Triple> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 4)
      throw ParseError(path, line_no,
                       "expected subject\\trelation\\tobject\\torigin");
    Triple t;
    t.subject = to_lower(trim(cols[0]));
    t.object = to_lower(trim(cols[2]));
    std::string rel = to_lower(trim(cols[1]));
    if (rel == "isa") t.relation = Relation::IsA;
    else if (rel == "haspart") t.relation = Relation::HasPart;
    else if (rel == "locatedat") t.relation = Relation::LocatedAt;
    else if (rel == "usedfor") t.relation = Relation::UsedFor;
    else throw ParseError(path, line_no, "unknown relation: " + cols[1]);
    std::string org = to_lower(trim(cols[3]));
    if (org == "conceptnet") t.origin = TripleOrigin::ConceptNet;
    else if (org == "wordnet") t.origin = TripleOrigin::WordNet;
    else if (org == "tuplekb") t.origin = TripleOrigin::TupleKB;
    else throw ParseError(path, line_no, "unknown origin: " + cols[3]);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

void append_string_array(std::string &out, const std::vector<std::string> &v) {
  out.push_back('[');
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(',');
    out += json_quote(v[i]);
  }
  out.push_back(']');
}

std::string entry_to_json(const KbEntry &e) {
  std::string out;
  out.reserve(128 + e.sentence.size());
  out += "{\"source\":";
  out += json_quote(e.source);
  out += ",\"term\":";
  out += json_quote(e.term);
  out += ",\"quantifier\":";
  out += e.quantifier ? json_quote(*e.quantifier) : "null";
  out += ",\"sentence\":";
  out += json_quote(e.sentence);
  out += ",\"score\":";
  out += format_score(e.score);
  out += ",\"before\":";
  append_string_array(out, e.before);
  out += ",\"after\":";
  append_string_array(out, e.after);
  out += ",\"synthesized\":";
  out += e.synthesized ? "true" : "false";
  out += "}";
  return out;
}

}  // namespace

std::string serialize_kb_jsonl(const std::vector<KbEntry> &entries,
                               bool header) {
  std::string out;
  if (header) out += std::string("# generics-miner ") + kVersion + "\n";
  for (const KbEntry &e : entries) {
    out += entry_to_json(e);
    out.push_back('\n');
  }
  return out;
}

void write_kb(const std::vector<KbEntry> &entries, const std::string &path,
              KbFormat format, bool header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  if (format == KbFormat::Jsonl) {
    out << serialize_kb_jsonl(entries, header);
    return;
  }
  if (header) out << "# generics-miner " << kVersion << "\n";
  out << "SOURCE\tTERM\tQUANTIFIER\tSENTENCE\tSCORE\n";
  for (const KbEntry &e : entries) {
    out << e.source << '\t' << e.term << '\t'
        << (e.quantifier ? *e.quantifier : "") << '\t' << e.sentence << '\t'
        << format_score(e.score) << '\n';
  }
}

std::vector<KbEntry> read_kb(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open kb " + path);
  std::vector<KbEntry> out;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &ex) {
      throw ParseError(path, line_no, ex.what());
    }
    try {
      KbEntry e;
      e.source = j.at("source").get<std::string>();
      e.term = j.at("term").get<std::string>();
      if (!j.at("quantifier").is_null())
        e.quantifier = j.at("quantifier").get<std::string>();
      e.sentence = j.at("sentence").get<std::string>();
      e.score = quantize_score(j.at("score").get<double>());
      e.before = j.at("before").get<std::vector<std::string>>();
      e.after = j.at("after").get<std::vector<std::string>>();
      e.synthesized = j.at("synthesized").get<bool>();
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception &ex) {
      throw ParseError(path, line_no, ex.what());
    }
  }
  return out;
}

}  // namespace gmine
