#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ingest.hpp"
#include "lexicon.hpp"

namespace gmine {

enum class Polarity { MustPass, MustFail };
enum class EvalMode { Full, Degraded };

struct Rule {
  std::string name;
  Polarity polarity = Polarity::MustPass;
  // Needs POS/dependency annotations; vacuously passed in degraded mode.
  bool syntactic = false;
  std::function<bool(const AnnotatedSentence &, const Lexicon &)> predicate;
};

struct RuleVerdict {
  bool retained = false;
  std::optional<std::string> failed_rule;
  std::optional<std::string> quantifier;
  bool stripped = false;  // quantifier re-entry occurred
  EvalMode mode = EvalMode::Full;
};

// The transform rule's name; it is order-pinned (see evaluate).
extern const std::string kQuantifierRule;

// The full ruleset in its listed order: the must-pass block, then the
// must-fail block.
std::vector<Rule> default_ruleset();

// Ruleset config file: "<rule-name> on|off" lines, '#' comments,
// unlisted rules stay enabled. Returns default_ruleset() filtered.
std::vector<Rule> load_ruleset(const std::string &path);

// Removes the leading positive quantifier: token indices and heads shift
// down, heads onto the removed token re-attach to the root, and the new
// first token is upper-cased. Throws NotAQuantifier when the first word is
// not a positive quantifier.
std::pair<std::string, AnnotatedSentence> strip_quantifier(
    const AnnotatedSentence &sent, const Lexicon &lex);

// Key concept head: the nsubj child of the root, else the last NOUN before
// the root. -1 when neither exists.
int key_concept_index(const AnnotatedSentence &sent);

// Lemma of the key concept head, lowercased and singularized.
// Throws NoKeyConcept when the sentence has none.
std::string extract_term(const AnnotatedSentence &sent, const Lexicon &lex);

// Evaluates the ruleset in order. The quantifier transform runs as a fixed
// pre-pass (strip, then evaluate every rule against the stripped sentence):
// this keeps the retained set invariant under rule reordering, which a
// mid-sequence restart would not. A must-pass rule returning false, or a
// must-fail rule returning true, rejects with that rule's name.
RuleVerdict evaluate(const AnnotatedSentence &sent, const Lexicon &lex,
                     const std::vector<Rule> &rules,
                     EvalMode mode = EvalMode::Full);

// Whitespace-tokenized pseudo-annotation for degraded plaintext evaluation.
AnnotatedSentence degrade(const SentenceRecord &record);

}  // namespace gmine
