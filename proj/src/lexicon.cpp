#include "lexicon.hpp"

#include <algorithm>
#include <fstream>

#include "errors.hpp"

namespace gmine {

std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
  }
  return "?";
}

char pos_wn_char(Pos p) {
  switch (p) {
    case Pos::Noun: return 'n';
    case Pos::Verb: return 'v';
    case Pos::Adj: return 'a';
    case Pos::Adv: return 'r';
  }
  return '?';
}

namespace {

bool parse_pos_char(char c, Pos &out) {
  switch (c) {
    case 'n': out = Pos::Noun; return true;
    case 'v': out = Pos::Verb; return true;
    case 'a': out = Pos::Adj; return true;
    case 's': out = Pos::Adj; return true;  // adjective satellite
    case 'r': out = Pos::Adv; return true;
  }
  return false;
}

bool is_offset(std::string_view s) {
  if (s.size() != 8) return false;
  for (char c : s)
    if (!is_ascii_digit(c)) return false;
  return true;
}

// Data-file words may carry an adjective syntax marker: "beautiful(ip)".
std::string strip_marker(std::string_view w) {
  size_t paren = w.find('(');
  if (paren != std::string_view::npos) w = w.substr(0, paren);
  return to_lower(w);
}

struct FilePos {
  const char *suffix;
  Pos pos;
};
constexpr FilePos kFiles[] = {{"noun", Pos::Noun},
                              {"verb", Pos::Verb},
                              {"adj", Pos::Adj},
                              {"adv", Pos::Adv}};

}  // namespace

std::string Lexicon::normalize(std::string_view lemma) {
  std::string out = to_lower(lemma);
  for (char &c : out)
    if (c == ' ') c = '_';
  return out;
}

StringSet load_wordlist(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open wordlist " + path);
  StringSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.insert(to_lower(t));
  }
  return out;
}

Lexicon Lexicon::load_wordnet(const std::string &dir) {
  Lexicon lex;

  for (const FilePos &fp : kFiles) {
    // data.* first: synset records, hypernym and part-meronym pointers.
    std::string data_path = dir + "/data." + fp.suffix;
    std::ifstream data(data_path);
    if (!data) throw IoError("missing WordNet file " + data_path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(data, line)) {
      ++line_no;
      if (line.empty() || line[0] == ' ') continue;  // license header
      std::vector<std::string_view> f = whitespace_tokens(line);
      if (f.size() < 6) throw ParseError(data_path, line_no, "short record");
      if (!is_offset(f[0]))
        throw ParseError(data_path, line_no, "malformed synset offset");
      Pos ss_pos;
      if (f[2].size() != 1 || !parse_pos_char(f[2][0], ss_pos))
        throw ParseError(data_path, line_no, "bad ss_type");

      Synset syn;
      syn.pos = ss_pos;
      syn.id = std::string(1, pos_wn_char(ss_pos)) + std::string(f[0]);

      size_t w_cnt = 0;
      try {
        w_cnt = std::stoul(std::string(f[3]), nullptr, 16);
      } catch (...) {
        throw ParseError(data_path, line_no, "bad word count");
      }
      size_t idx = 4;
      if (w_cnt == 0 || f.size() < idx + 2 * w_cnt + 1)
        throw ParseError(data_path, line_no, "truncated word list");
      for (size_t w = 0; w < w_cnt; ++w) {
        syn.lemmas.push_back(strip_marker(f[idx]));
        idx += 2;  // word, lex_id
      }

      size_t p_cnt = 0;
      try {
        p_cnt = std::stoul(std::string(f[idx]));
      } catch (...) {
        throw ParseError(data_path, line_no, "bad pointer count");
      }
      ++idx;
      if (f.size() < idx + 4 * p_cnt)
        throw ParseError(data_path, line_no, "truncated pointer list");
      for (size_t p = 0; p < p_cnt; ++p) {
        std::string_view sym = f[idx];
        std::string_view off = f[idx + 1];
        std::string_view tpos = f[idx + 2];
        if (!is_offset(off))
          throw ParseError(data_path, line_no, "malformed pointer offset");
        std::string target = std::string(tpos) + std::string(off);
        if (sym == "@" || sym == "@i")
          syn.hypernyms.push_back(target);
        else if (sym == "%p")
          syn.part_meronyms.push_back(target);
        idx += 4;
      }
      lex.synsets_.emplace(syn.id, std::move(syn));
    }

    // index.*: lemma -> synset offsets in most-frequent-sense order.
    std::string index_path = dir + "/index." + fp.suffix;
    std::ifstream index(index_path);
    if (!index) throw IoError("missing WordNet file " + index_path);
    line_no = 0;
    auto &senses = lex.senses_[(int)fp.pos];
    auto &lemma_list = lex.lemma_list_[(int)fp.pos];
    while (std::getline(index, line)) {
      ++line_no;
      if (line.empty() || line[0] == ' ') continue;
      std::vector<std::string_view> f = whitespace_tokens(line);
      if (f.size() < 7) throw ParseError(index_path, line_no, "short record");
      std::string lemma = normalize(f[0]);
      size_t synset_cnt = 0, p_cnt = 0;
      try {
        synset_cnt = std::stoul(std::string(f[2]));
        p_cnt = std::stoul(std::string(f[3]));
      } catch (...) {
        throw ParseError(index_path, line_no, "bad counts");
      }
      size_t first_offset = 4 + p_cnt + 2;  // skip ptr symbols, sense/tag cnt
      if (f.size() < first_offset + synset_cnt)
        throw ParseError(index_path, line_no, "truncated offset list");
      std::vector<std::string> ids;
      ids.reserve(synset_cnt);
      char pc = pos_wn_char(fp.pos);
      for (size_t k = 0; k < synset_cnt; ++k) {
        std::string_view off = f[first_offset + k];
        if (!is_offset(off))
          throw ParseError(index_path, line_no, "malformed synset offset");
        ids.push_back(std::string(1, pc) + std::string(off));
      }
      lemma_list.push_back(lemma);
      senses.emplace(std::move(lemma), std::move(ids));
    }
  }
  return lex;
}

void Lexicon::load_wordlists(const std::string &dir) {
  wordlists_.bad_first_words = load_wordlist(dir + "/bad_first_words.txt");
  wordlists_.bad_words = load_wordlist(dir + "/bad_words.txt");
  wordlists_.personal_pronouns = load_wordlist(dir + "/personal_pronouns.txt");
  wordlists_.modals = load_wordlist(dir + "/modals.txt");
  wordlists_.modal_exclusions = load_wordlist(dir + "/modal_exclusions.txt");
  wordlists_.negations = load_wordlist(dir + "/negations.txt");
  wordlists_.positive_quantifiers =
      load_wordlist(dir + "/positive_quantifiers.txt");
  wordlists_.stopwords = load_wordlist(dir + "/stopwords.txt");
  // NE labels are conventionally uppercase; load_wordlist lowercases, so
  // restore case here: matching is done on uppercased labels.
  StringSet raw = load_wordlist(dir + "/ne_labels.txt");
  wordlists_.acceptable_ne_labels.clear();
  for (const std::string &s : raw) {
    std::string up = s;
    for (char &c : up) c = ascii_upper(c);
    wordlists_.acceptable_ne_labels.insert(up);
  }
}

Lexicon Lexicon::load(const std::string &wordnet_dir,
                      const std::string &wordlists_dir) {
  Lexicon lex = load_wordnet(wordnet_dir);
  lex.load_wordlists(wordlists_dir);
  return lex;
}

bool Lexicon::in_vocab(std::string_view lemma) const {
  std::string key = normalize(lemma);
  for (int i = 0; i < 4; ++i)
    if (senses_[i].count(key)) return true;
  return false;
}

bool Lexicon::in_vocab(std::string_view lemma, Pos pos) const {
  return senses_[(int)pos].count(normalize(lemma)) > 0;
}

std::vector<Pos> Lexicon::pos_tags_of(std::string_view lemma) const {
  std::string key = normalize(lemma);
  std::vector<Pos> out;
  for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv})
    if (senses_[(int)p].count(key)) out.push_back(p);
  return out;
}

const Synset *Lexicon::first_sense(std::string_view lemma, Pos pos) const {
  auto it = senses_[(int)pos].find(normalize(lemma));
  if (it == senses_[(int)pos].end() || it->second.empty()) return nullptr;
  auto sit = synsets_.find(it->second.front());
  return sit == synsets_.end() ? nullptr : &sit->second;
}

const Synset *Lexicon::synset(const std::string &id) const {
  auto it = synsets_.find(id);
  return it == synsets_.end() ? nullptr : &it->second;
}

std::vector<std::string> Lexicon::hypernym_lemmas(std::string_view lemma) const {
  const Synset *s = first_sense(lemma, Pos::Noun);
  if (!s) throw NotInVocabulary(std::string(lemma));
  std::vector<std::string> out;
  for (const std::string &id : s->hypernyms) {
    const Synset *t = synset(id);
    if (!t) continue;
    out.insert(out.end(), t->lemmas.begin(), t->lemmas.end());
  }
  return out;
}

std::vector<std::string> Lexicon::part_meronym_lemmas(
    std::string_view lemma) const {
  const Synset *s = first_sense(lemma, Pos::Noun);
  if (!s) throw NotInVocabulary(std::string(lemma));
  std::vector<std::string> out;
  for (const std::string &id : s->part_meronyms) {
    const Synset *t = synset(id);
    if (!t) continue;
    out.insert(out.end(), t->lemmas.begin(), t->lemmas.end());
  }
  return out;
}

std::string Lexicon::singularize(std::string_view word) const {
  std::string w = normalize(word);
  if (in_vocab(w, Pos::Noun)) return w;

  static constexpr std::pair<std::string_view, std::string_view> kRules[] = {
      {"ches", "ch"}, {"shes", "sh"}, {"ses", "s"}, {"xes", "x"},
      {"zes", "z"},   {"ves", "f"},   {"men", "man"}, {"ies", "y"},
      {"s", ""},
  };
  for (auto [suf, rep] : kRules) {
    if (w.size() > suf.size() && ends_with(w, suf)) {
      std::string cand = w.substr(0, w.size() - suf.size()) + std::string(rep);
      if (in_vocab(cand, Pos::Noun)) return cand;
    }
  }
  return w;
}

size_t Lexicon::lemma_count(Pos pos) const { return senses_[(int)pos].size(); }

const std::vector<std::string> &Lexicon::lemmas(Pos pos) const {
  return lemma_list_[(int)pos];
}

}  // namespace gmine
