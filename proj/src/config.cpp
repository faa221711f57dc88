#include "config.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "text_util.hpp"

namespace gmine {

namespace {

int to_int(const std::string &key, const std::string &v) {
  try {
    return std::stoi(v);
  } catch (...) {
    throw ConfigError("bad integer for " + key + ": " + v);
  }
}

double to_double(const std::string &key, const std::string &v) {
  try {
    return std::stod(v);
  } catch (...) {
    throw ConfigError("bad number for " + key + ": " + v);
  }
}

bool to_bool(const std::string &key, const std::string &v) {
  std::string s = to_lower(v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("bad boolean for " + key + ": " + v);
}

}  // namespace

void PipelineConfig::apply(const std::string &key, const std::string &value) {
  if (key == "manifest") manifest = value;
  else if (key == "out_dir") out_dir = value;
  else if (key == "context_window") context_window = to_int(key, value);
  else if (key == "clean.min_chars") limits.min_chars = (size_t)to_int(key, value);
  else if (key == "clean.max_chars") limits.max_chars = (size_t)to_int(key, value);
  else if (key == "clean.min_toks") limits.min_toks = (size_t)to_int(key, value);
  else if (key == "clean.max_toks") limits.max_toks = (size_t)to_int(key, value);
  else if (key == "clean.lang_threshold") lang_threshold = to_double(key, value);
  else if (key == "wordnet_dir") wordnet_dir = value;
  else if (key == "wordlists_dir") wordlists_dir = value;
  else if (key == "profiles_dir") profiles_dir = value;
  else if (key == "ruleset") ruleset_file = value;
  else if (key == "scorer") scorer_spec = value;
  else if (key == "tau") tau = to_double(key, value);
  else if (key == "triples") triples_file = value;
  else if (key == "synth_wordnet") synth_wordnet = to_bool(key, value);
  else if (key == "workers") workers = to_int(key, value);
  else if (key == "shards") shards = to_int(key, value);
  else if (key == "seed") seed = (uint64_t)std::stoull(value);
  else if (key == "strict") strict = to_bool(key, value);
  else if (key == "chains.postings_cap") postings_cap = (size_t)to_int(key, value);
  else if (key == "chains.weight_answer") chain_weights.answer_s1 = to_double(key, value);
  else if (key == "chains.weight_question") chain_weights.question_s2 = to_double(key, value);
  else if (key == "chains.weight_link") chain_weights.link = to_double(key, value);
  else throw ConfigError("unknown config key: " + key);
}

PipelineConfig PipelineConfig::from_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  PipelineConfig cfg;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError(path, line_no, "expected key = value");
    cfg.apply(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

std::string PipelineConfig::print() const {
  std::ostringstream out;
  out << "manifest = " << manifest << "\n";
  out << "out_dir = " << out_dir << "\n";
  out << "context_window = " << context_window << "\n";
  out << "clean.min_chars = " << limits.min_chars << "\n";
  out << "clean.max_chars = " << limits.max_chars << "\n";
  out << "clean.min_toks = " << limits.min_toks << "\n";
  out << "clean.max_toks = " << limits.max_toks << "\n";
  out << "clean.lang_threshold = " << lang_threshold << "\n";
  out << "wordnet_dir = " << wordnet_dir << "\n";
  out << "wordlists_dir = " << wordlists_dir << "\n";
  out << "profiles_dir = " << profiles_dir << "\n";
  out << "ruleset = " << ruleset_file << "\n";
  out << "scorer = " << scorer_spec << "\n";
  out << "tau = " << tau << "\n";
  out << "triples = " << triples_file << "\n";
  out << "synth_wordnet = " << (synth_wordnet ? "true" : "false") << "\n";
  out << "workers = " << workers << "\n";
  out << "shards = " << shards << "\n";
  out << "seed = " << seed << "\n";
  out << "strict = " << (strict ? "true" : "false") << "\n";
  out << "chains.postings_cap = " << postings_cap << "\n";
  out << "chains.weight_answer = " << chain_weights.answer_s1 << "\n";
  out << "chains.weight_question = " << chain_weights.question_s2 << "\n";
  out << "chains.weight_link = " << chain_weights.link << "\n";
  return out.str();
}

void PipelineConfig::validate() const {
  if (tau < 0.0 || tau > 1.0) throw ConfigError("tau must lie in [0,1]");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (shards < 1) throw ConfigError("shards must be >= 1");
  if (context_window < 0) throw ConfigError("context_window must be >= 0");
}

}  // namespace gmine
