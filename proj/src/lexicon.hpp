#pragma once

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "text_util.hpp"

namespace gmine {

enum class Pos { Noun, Verb, Adj, Adv };

std::string_view pos_name(Pos p);           // "NOUN" | "VERB" | "ADJ" | "ADV"
char pos_wn_char(Pos p);                    // 'n' | 'v' | 'a' | 'r'

struct Synset {
  std::string id;  // "<pos char><offset>", e.g. "n13104059"
  Pos pos = Pos::Noun;
  std::vector<std::string> lemmas;          // in record order, lowercased
  std::vector<std::string> hypernyms;       // target synset ids (@ and @i)
  std::vector<std::string> part_meronyms;   // target synset ids (%p)
};

// Named word lists consumed by the rules; one entry per line, '#' comments.
struct Wordlists {
  StringSet bad_first_words;
  StringSet bad_words;
  StringSet personal_pronouns;
  StringSet modals;
  StringSet modal_exclusions;  // modals the modal rule ignores
  StringSet negations;
  StringSet positive_quantifiers;
  StringSet acceptable_ne_labels;
  StringSet stopwords;
};

StringSet load_wordlist(const std::string &path);

class Lexicon {
 public:
  // dir must contain WordNet 3.x index.{noun,verb,adj,adv} and
  // data.{noun,verb,adj,adv}. Sense order in the index is preserved.
  static Lexicon load_wordnet(const std::string &dir);
  static Lexicon load(const std::string &wordnet_dir,
                      const std::string &wordlists_dir);

  void load_wordlists(const std::string &dir);

  bool in_vocab(std::string_view lemma) const;
  bool in_vocab(std::string_view lemma, Pos pos) const;

  // Case-insensitive; spaces normalize to underscores. Empty when absent.
  std::vector<Pos> pos_tags_of(std::string_view lemma) const;

  // First-listed synset for (lemma, pos); nullptr when absent.
  const Synset *first_sense(std::string_view lemma, Pos pos) const;
  const Synset *synset(const std::string &id) const;

  // First-sense relations, as lemmas of the target synsets.
  // Throws NotInVocabulary when lemma is not a known noun.
  std::vector<std::string> hypernym_lemmas(std::string_view lemma) const;
  std::vector<std::string> part_meronym_lemmas(std::string_view lemma) const;

  // Plural -> singular by suffix rules, validated against the noun vocab.
  std::string singularize(std::string_view word) const;

  size_t lemma_count(Pos pos) const;
  const std::vector<std::string> &lemmas(Pos pos) const;

  const Wordlists &wordlists() const { return wordlists_; }
  Wordlists &wordlists() { return wordlists_; }

 private:
  static std::string normalize(std::string_view lemma);

  // (normalized lemma, pos) -> synset ids in sense order
  std::unordered_map<std::string, std::vector<std::string>> senses_[4];
  std::vector<std::string> lemma_list_[4];
  std::unordered_map<std::string, Synset> synsets_;
  Wordlists wordlists_;
};

}  // namespace gmine
