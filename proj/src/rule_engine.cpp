#include "rule_engine.hpp"

#include <fstream>
#include <map>

#include "errors.hpp"

namespace gmine {

const std::string kQuantifierRule = "look-for-positive-quantifier-at-first-word";

namespace {

bool is_verbal_upos(std::string_view upos) {
  return upos == "VERB" || upos == "AUX";
}

bool feats_has(std::string_view feats, std::string_view kv) {
  if (feats.empty() || feats == "_") return false;
  for (std::string_view f : split_views(feats, '|'))
    if (f == kv) return true;
  return false;
}

bool has_verbal_feats(const AnnotatedToken &t) {
  if (t.feats.empty() || t.feats == "_") return false;
  for (std::string_view f : split_views(t.feats, '|'))
    if (starts_with(f, "VerbForm=") || starts_with(f, "Tense=")) return true;
  return false;
}

const StringSet &irregular_past() {
  static const StringSet set = {
      "ate",    "began",  "bought", "broke", "brought", "built",  "came",
      "caught", "chose",  "did",    "drank", "drove",   "fell",   "flew",
      "fought", "found",  "gave",   "went",  "grew",    "had",    "held",
      "kept",   "knew",   "left",   "lost",  "made",    "met",    "paid",
      "ran",    "rode",   "rose",   "said",  "sang",    "sat",    "saw",
      "slept",  "sold",   "spoke",  "stood", "swam",    "taught", "thought",
      "threw",  "took",   "understood", "was", "were",  "won",    "wore",
      "wrote"};
  return set;
}

const StringSet &irregular_participles() {
  static const StringSet set = {
      "been",   "broken", "built",  "brought", "caught", "chosen", "done",
      "drawn",  "driven", "eaten",  "fallen",  "flown",  "given",  "gone",
      "grown",  "held",   "known",  "made",    "seen",   "shown",  "sold",
      "spoken", "taken",  "taught", "thrown",  "understood", "worn",
      "written"};
  return set;
}

// Verb-form tests consult FEATS when present, then the XPOS tag, then a
// suffix heuristic with an irregular-verb table.
bool is_past_participle(const AnnotatedToken &t) {
  if (has_verbal_feats(t))
    return feats_has(t.feats, "VerbForm=Part") && feats_has(t.feats, "Tense=Past");
  if (!t.xpos.empty() && t.xpos != "_") return t.xpos == "VBN";
  return irregular_participles().count(t.lower) > 0 || ends_with(t.lower, "ed");
}

bool is_present_participle(const AnnotatedToken &t) {
  if (has_verbal_feats(t))
    return feats_has(t.feats, "VerbForm=Ger") ||
           (feats_has(t.feats, "VerbForm=Part") &&
            feats_has(t.feats, "Tense=Pres"));
  if (!t.xpos.empty() && t.xpos != "_") return t.xpos == "VBG";
  return t.lower.size() > 4 && ends_with(t.lower, "ing");
}

bool is_past_tense(const AnnotatedToken &t) {
  if (has_verbal_feats(t))
    return feats_has(t.feats, "Tense=Past") &&
           !feats_has(t.feats, "VerbForm=Part");
  if (!t.xpos.empty() && t.xpos != "_") return t.xpos == "VBD";
  return irregular_past().count(t.lower) > 0 || ends_with(t.lower, "ed");
}

bool is_present_be(const AnnotatedToken &t) {
  if (to_lower(t.lemma) != "be" && t.lower != "is" && t.lower != "are" &&
      t.lower != "am" && t.lower != "'s" && t.lower != "'re")
    return false;
  if (feats_has(t.feats, "Tense=Past")) return false;
  if (!t.xpos.empty() && t.xpos != "_")
    return t.xpos == "VBZ" || t.xpos == "VBP" || t.xpos == "VB";
  return t.lower == "is" || t.lower == "are" || t.lower == "am" ||
         t.lower == "'s" || t.lower == "'re" || t.lower == "be";
}

// Present passive: the verb heads an auxiliary "be" in present tense.
bool has_present_be_aux(const AnnotatedSentence &s, int head_idx) {
  for (size_t i = 0; i < s.tokens.size(); ++i) {
    const AnnotatedToken &t = s.tokens[i];
    if (t.head != head_idx) continue;
    if (t.deprel.find("aux") == std::string::npos && t.deprel != "cop")
      continue;
    if (is_present_be(t)) return true;
  }
  return false;
}

bool text_contains(const AnnotatedSentence &s, std::string_view needle_lc) {
  return to_lower(s.record.text).find(needle_lc) != std::string::npos;
}

}  // namespace

int key_concept_index(const AnnotatedSentence &sent) {
  int root = sent.root_index();
  if (root < 0) return -1;
  for (size_t i = 0; i < sent.tokens.size(); ++i) {
    if (sent.tokens[i].head == root &&
        starts_with(sent.tokens[i].deprel, "nsubj"))
      return (int)i;
  }
  for (int i = root - 1; i >= 0; --i)
    if (sent.tokens[i].upos == "NOUN") return i;
  return -1;
}

std::string extract_term(const AnnotatedSentence &sent, const Lexicon &lex) {
  int idx = key_concept_index(sent);
  if (idx < 0) throw NoKeyConcept(sent.record.text);
  return lex.singularize(to_lower(sent.tokens[idx].lemma));
}

std::pair<std::string, AnnotatedSentence> strip_quantifier(
    const AnnotatedSentence &sent, const Lexicon &lex) {
  if (sent.tokens.empty() ||
      !lex.wordlists().positive_quantifiers.count(sent.tokens[0].lower))
    throw NotAQuantifier(sent.tokens.empty() ? "" : sent.tokens[0].surface);

  std::string quantifier = sent.tokens[0].surface;
  AnnotatedSentence out;
  out.record = sent.record;
  out.tokens.assign(sent.tokens.begin() + 1, sent.tokens.end());

  int old_root = sent.root_index();
  for (AnnotatedToken &t : out.tokens) {
    if (t.head == AnnotatedToken::kRoot) continue;
    if (t.head == 0) {
      // Head was the removed token; re-attach to the root.
      t.head = old_root > 0 ? old_root - 1 : AnnotatedToken::kRoot;
    } else {
      t.head -= 1;
    }
  }
  if (old_root == 0 && !out.tokens.empty()) {
    // The quantifier was the root; promote its first dependent and move the
    // remaining re-attached tokens under it.
    int promoted = -1;
    for (size_t i = 0; i < out.tokens.size(); ++i) {
      if (out.tokens[i].head == AnnotatedToken::kRoot) {
        if (promoted < 0)
          promoted = (int)i;
        else
          out.tokens[i].head = promoted;
      }
    }
  }

  if (!out.tokens.empty()) {
    AnnotatedToken &first = out.tokens.front();
    if (!first.surface.empty())
      first.surface[0] = ascii_upper(first.surface[0]);
  }

  // Rebuild the text without the quantifier, upper-casing the new start.
  const std::string &text = sent.record.text;
  std::string rest;
  if (starts_with(text, quantifier))
    rest = trim(std::string_view(text).substr(quantifier.size()));
  else if (!out.tokens.empty()) {
    for (size_t i = 0; i < out.tokens.size(); ++i) {
      rest += out.tokens[i].surface;
      bool no_space = false;
      for (std::string_view f : split_views(out.tokens[i].misc, '|'))
        if (f == "SpaceAfter=No") no_space = true;
      if (!no_space && i + 1 < out.tokens.size()) rest.push_back(' ');
    }
  }
  if (!rest.empty()) rest[0] = ascii_upper(rest[0]);
  out.record.text = rest;
  return {quantifier, std::move(out)};
}

std::vector<Rule> default_ruleset() {
  std::vector<Rule> rules;
  auto must_pass = [&](std::string name, bool syntactic, auto pred) {
    rules.push_back({std::move(name), Polarity::MustPass, syntactic, pred});
  };
  auto must_fail = [&](std::string name, bool syntactic, auto pred) {
    rules.push_back({std::move(name), Polarity::MustFail, syntactic, pred});
  };

  must_pass("is-short-enough", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return s.tokens.size() <= 100;
            });
  must_pass("starts-with-capital", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return !s.record.text.empty() &&
                     is_ascii_upper(s.record.text[0]);
            });
  must_pass("ends-with-period", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return !s.record.text.empty() && s.record.text.back() == '.';
            });
  must_pass("has-at-least-one-token", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return !s.tokens.empty();
            });
  must_pass("has-no-bad-first-word", false,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              return s.tokens.empty() ||
                     !lex.wordlists().bad_first_words.count(s.tokens[0].lower);
            });
  must_pass("has-no-bad-words", false,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              for (const AnnotatedToken &t : s.tokens)
                if (lex.wordlists().bad_words.count(t.lower)) return false;
              return true;
            });
  must_pass("has-no-bad-pronouns", false,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              for (const AnnotatedToken &t : s.tokens)
                if (lex.wordlists().personal_pronouns.count(t.lower))
                  return false;
              return true;
            });
  must_pass("has-no-negations", false,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              for (const AnnotatedToken &t : s.tokens)
                if (lex.wordlists().negations.count(t.lower)) return false;
              return true;
            });
  must_pass("has-no-modals", false,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              const Wordlists &wl = lex.wordlists();
              for (const AnnotatedToken &t : s.tokens)
                if (wl.modals.count(t.lower) &&
                    !wl.modal_exclusions.count(t.lower))
                  return false;
              return true;
            });
  must_pass("first-word-is-not-verb", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return s.tokens.empty() || !is_verbal_upos(s.tokens[0].upos);
            });
  must_pass("first-word-is-not-conjunction", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              if (s.tokens.empty()) return true;
              const std::string &u = s.tokens[0].upos;
              return u != "CCONJ" && u != "SCONJ" && u != "CONJ";
            });
  // Transform rule: handled as a fixed pre-pass by evaluate(); listed here
  // so the ruleset carries all 27 names in order.
  must_pass(kQuantifierRule, false,
            [](const AnnotatedSentence &, const Lexicon &) { return true; });
  must_pass("has-acceptable-past-participle-root", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              int root = s.root_index();
              if (root < 0) return true;
              const AnnotatedToken &t = s.tokens[root];
              if (!is_verbal_upos(t.upos)) return true;
              if (!is_past_participle(t)) return true;
              return has_present_be_aux(s, root);  // present passive
            });
  must_pass("noun-exists-before-root", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              int root = s.root_index();
              for (int i = 0; i < root; ++i)
                if (s.tokens[i].upos == "NOUN") return true;
              return false;
            });
  must_pass("key-concept-head-pos-tags-not-contradicted-by-wordnet", true,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              int idx = key_concept_index(s);
              if (idx < 0) return true;
              std::vector<Pos> tags =
                  lex.pos_tags_of(to_lower(s.tokens[idx].lemma));
              if (tags.empty()) return true;  // unknown word: no contradiction
              for (Pos p : tags)
                if (p == Pos::Noun) return true;
              return false;
            });
  must_pass("has-no-digits", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              for (char c : s.record.text)
                if (is_ascii_digit(c)) return false;
              return true;
            });
  must_pass("all-propn-exist-in-wordnet", true,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              for (const AnnotatedToken &t : s.tokens)
                if (t.upos == "PROPN" && !lex.in_vocab(to_lower(t.lemma)))
                  return false;
              return true;
            });
  must_pass("all-propn-have-acceptable-ne-labels", true,
            [](const AnnotatedSentence &s, const Lexicon &lex) {
              for (const AnnotatedToken &t : s.tokens) {
                if (t.upos != "PROPN") continue;
                if (t.ne_label.empty() ||
                    !lex.wordlists().acceptable_ne_labels.count(t.ne_label))
                  return false;
              }
              return true;
            });

  must_fail("dot_dot_in_sentence", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return s.record.text.find("..") != std::string::npos;
            });
  must_fail("www_in_sentence", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return text_contains(s, "www");
            });
  must_fail("com_in_sentence", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return text_contains(s, ".com");
            });
  must_fail("many_hyphens_in_sentence", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              int hyphens = 0;
              for (char c : s.record.text)
                if (c == '-') ++hyphens;
              return hyphens >= 2;
            });
  // Redundant with ends-with-period; kept for fidelity to the rule list.
  must_fail("sentence_does_not_end_with_period", false,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return s.record.text.empty() || s.record.text.back() != '.';
            });
  must_fail("remove-non-verb-roots", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              int root = s.root_index();
              return root >= 0 && !is_verbal_upos(s.tokens[root].upos);
            });
  must_fail("remove-present-participle-roots", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              int root = s.root_index();
              return root >= 0 && is_verbal_upos(s.tokens[root].upos) &&
                     is_present_participle(s.tokens[root]);
            });
  must_fail("remove-first-word-roots", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              return !s.tokens.empty() && s.root_index() == 0;
            });
  must_fail("remove-past-tense-roots", true,
            [](const AnnotatedSentence &s, const Lexicon &) {
              int root = s.root_index();
              if (root < 0 || !is_verbal_upos(s.tokens[root].upos))
                return false;
              if (!is_past_tense(s.tokens[root])) return false;
              // A passive with a present "be" is handled by the
              // past-participle rule, not rejected here.
              return !(is_past_participle(s.tokens[root]) &&
                       has_present_be_aux(s, root));
            });
  return rules;
}

std::vector<Rule> load_ruleset(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ruleset " + path);
  std::map<std::string, bool> toggles;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string_view> parts = whitespace_tokens(t);
    if (parts.size() != 2 || (parts[1] != "on" && parts[1] != "off"))
      throw ParseError(path, line_no, "expected '<rule-name> on|off'");
    toggles[std::string(parts[0])] = parts[1] == "on";
  }
  std::vector<Rule> all = default_ruleset();
  for (const auto &[name, on] : toggles) {
    bool known = false;
    for (const Rule &r : all) known |= r.name == name;
    if (!known) throw ParseError(path, 0, "unknown rule: " + name);
  }
  std::vector<Rule> out;
  for (Rule &r : all) {
    auto it = toggles.find(r.name);
    if (it == toggles.end() || it->second) out.push_back(std::move(r));
  }
  return out;
}

RuleVerdict evaluate(const AnnotatedSentence &sent, const Lexicon &lex,
                     const std::vector<Rule> &rules, EvalMode mode) {
  if (mode == EvalMode::Full) {
    for (const AnnotatedToken &t : sent.tokens)
      if (t.upos.empty() || t.upos == "_")
        throw MissingAnnotation("token '" + t.surface + "' in '" +
                                sent.record.text + "'");
  }

  RuleVerdict v;
  v.mode = mode;

  bool quantifier_enabled = false;
  for (const Rule &r : rules) quantifier_enabled |= r.name == kQuantifierRule;

  const AnnotatedSentence *cur = &sent;
  AnnotatedSentence stripped;
  while (quantifier_enabled && !cur->tokens.empty() &&
         lex.wordlists().positive_quantifiers.count(cur->tokens[0].lower)) {
    auto [q, next] = strip_quantifier(*cur, lex);
    if (!v.quantifier) v.quantifier = q;
    v.stripped = true;
    stripped = std::move(next);
    cur = &stripped;
  }

  for (const Rule &r : rules) {
    if (r.name == kQuantifierRule) continue;
    if (mode == EvalMode::Degraded && r.syntactic) continue;
    bool fired = r.predicate(*cur, lex);
    bool ok = r.polarity == Polarity::MustPass ? fired : !fired;
    if (!ok) {
      v.retained = false;
      v.failed_rule = r.name;
      return v;
    }
  }
  v.retained = true;
  return v;
}

AnnotatedSentence degrade(const SentenceRecord &record) {
  AnnotatedSentence out;
  out.record = record;
  for (std::string_view w : whitespace_tokens(record.text)) {
    AnnotatedToken t;
    t.surface = std::string(w);
    t.lemma = t.surface;
    t.lower = to_lower(w);
    t.head = AnnotatedToken::kRoot;
    out.tokens.push_back(std::move(t));
  }
  return out;
}

}  // namespace gmine
