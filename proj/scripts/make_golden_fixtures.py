#!/usr/bin/env python3
"""Emits the hand-annotated golden corpus and its expected verdicts.

Annotations follow the parser conventions the rule engine expects:
copulas head their clauses (so "Trees are plants" has a verbal root),
PTB tags in XPOS, morphological features in FEATS, named-entity labels in
MISC as Ent=<LABEL>. Run:

    python3 scripts/make_golden_fixtures.py data/fixtures
"""

import sys

# token: (form, lemma, upos, xpos, feats, head(1-based, 0=root), deprel, misc)
# sentence: (tokens, retained, failed_rule, quantifier, term)
DOCS = []


def doc(name):
    entry = {"id": name, "sents": []}
    DOCS.append(entry)
    return entry


def sent(d, tokens, retained, failed=None, quantifier=None, term=None,
         text=None):
    d["sents"].append((tokens, retained, failed, quantifier, term, text))


PRES = "Tense=Pres|VerbForm=Fin"
PAST = "Tense=Past|VerbForm=Fin"
PART = "Tense=Past|VerbForm=Part"
GER = "Tense=Pres|VerbForm=Part"
NSP = "SpaceAfter=No"

trees = doc("trees")
sent(trees, [
    ("Trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("perennial", "perennial", "ADJ", "JJ", "_", 4, "amod", "_"),
    ("plants", "plant", "NOUN", "NNS", "Number=Plur", 2, "attr", "_"),
    ("that", "that", "PRON", "WDT", "PronType=Rel", 6, "nsubj", "_"),
    ("have", "have", "VERB", "VBP", PRES, 4, "relcl", "_"),
    ("long", "long", "ADJ", "JJ", "_", 9, "amod", "_"),
    ("woody", "woody", "ADJ", "JJ", "_", 9, "amod", "_"),
    ("trunks", "trunk", "NOUN", "NNS", "Number=Plur", 6, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="tree")
sent(trees, [
    ("Trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("woody", "woody", "ADJ", "JJ", "_", 4, "amod", "_"),
    ("plants", "plant", "NOUN", "NNS", "Number=Plur", 2, "attr", "_"),
    ("which", "which", "PRON", "WDT", "PronType=Rel", 6, "nsubj", "_"),
    ("continue", "continue", "VERB", "VBP", PRES, 4, "relcl", "_"),
    ("growing", "grow", "VERB", "VBG", GER, 6, "xcomp", "_"),
    ("until", "until", "SCONJ", "IN", "_", 10, "mark", "_"),
    ("they", "they", "PRON", "PRP", "PronType=Prs", 10, "nsubj", "_"),
    ("die", "die", "VERB", "VBP", PRES, 6, "advcl", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="tree")
sent(trees, [
    ("Most", "most", "ADJ", "JJS", "Degree=Sup", 2, "amod", "_"),
    ("trees", "tree", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("add", "add", "VERB", "VBP", PRES, 0, "root", "_"),
    ("one", "one", "NUM", "CD", "NumType=Card", 6, "nummod", "_"),
    ("new", "new", "ADJ", "JJ", "_", 6, "amod", "_"),
    ("ring", "ring", "NOUN", "NN", "Number=Sing", 3, "dobj", "_"),
    ("for", "for", "ADP", "IN", "_", 3, "prep", "_"),
    ("each", "each", "DET", "DT", "_", 9, "det", "_"),
    ("year", "year", "NOUN", "NN", "Number=Sing", 7, "pobj", "_"),
    ("of", "of", "ADP", "IN", "_", 9, "prep", "_"),
    ("growth", "growth", "NOUN", "NN", "Number=Sing", 10, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, quantifier="Most", term="tree")
sent(trees, [
    ("Trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("produce", "produce", "VERB", "VBP", PRES, 0, "root", "_"),
    ("oxygen", "oxygen", "NOUN", "NN", "Number=Sing", 2, "dobj", "_"),
    ("by", "by", "ADP", "IN", "_", 2, "prep", "_"),
    ("absorbing", "absorb", "VERB", "VBG", GER, 4, "pcomp", "_"),
    ("carbon", "carbon", "NOUN", "NN", "Number=Sing", 7, "compound", "_"),
    ("dioxide", "dioxide", "NOUN", "NN", "Number=Sing", 5, "dobj", "_"),
    ("from", "from", "ADP", "IN", "_", 5, "prep", "_"),
    ("the", "the", "DET", "DT", "_", 11, "det", "_"),
    ("air", "air", "NOUN", "NN", "Number=Sing", 8, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="tree")
sent(trees, [
    ("Trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("large", "large", "ADJ", "JJ", "_", 9, "amod", NSP),
    (",", ",", "PUNCT", ",", "_", 9, "punct", "_"),
    ("generally", "generally", "ADV", "RB", "_", 6, "advmod", "_"),
    ("single-stemmed", "single-stemmed", "ADJ", "JJ", "_", 9, "amod", NSP),
    (",", ",", "PUNCT", ",", "_", 9, "punct", "_"),
    ("woody", "woody", "ADJ", "JJ", "_", 9, "amod", "_"),
    ("plants", "plant", "NOUN", "NNS", "Number=Plur", 2, "attr", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="tree")
sent(trees, [
    ("Trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("live", "live", "VERB", "VBP", PRES, 0, "root", "_"),
    ("in", "in", "ADP", "IN", "_", 2, "prep", "_"),
    ("cavities", "cavity", "NOUN", "NNS", "Number=Plur", 3, "pobj", "_"),
    ("or", "or", "CCONJ", "CC", "_", 4, "cc", "_"),
    ("hollows", "hollow", "NOUN", "NNS", "Number=Plur", 4, "conj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="tree")
sent(trees, [
    ("Trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("grow", "grow", "VERB", "VBP", PRES, 0, "root", "_"),
    ("using", "use", "VERB", "VBG", GER, 2, "advcl", "_"),
    ("photosynthesis", "photosynthesis", "NOUN", "NN", "Number=Sing", 3,
     "dobj", NSP),
    (",", ",", "PUNCT", ",", "_", 2, "punct", "_"),
    ("absorbing", "absorb", "VERB", "VBG", GER, 2, "advcl", "_"),
    ("carbon", "carbon", "NOUN", "NN", "Number=Sing", 8, "compound", "_"),
    ("dioxide", "dioxide", "NOUN", "NN", "Number=Sing", 6, "dobj", "_"),
    ("and", "and", "CCONJ", "CC", "_", 6, "cc", "_"),
    ("releasing", "release", "VERB", "VBG", GER, 6, "conj", "_"),
    ("oxygen", "oxygen", "NOUN", "NN", "Number=Sing", 10, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="tree")

facts = doc("facts")
sent(facts, [
    ("Storms", "storm", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("can", "can", "AUX", "MD", "VerbForm=Fin", 3, "aux", "_"),
    ("produce", "produce", "VERB", "VB", "VerbForm=Inf", 0, "root", "_"),
    ("lightning", "lightning", "NOUN", "NN", "Number=Sing", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, term="storm")
sent(facts, [
    ("Lightning", "lightning", "NOUN", "NN", "Number=Sing", 3, "nsubj", "_"),
    ("can", "can", "AUX", "MD", "VerbForm=Fin", 3, "aux", "_"),
    ("start", "start", "VERB", "VB", "VerbForm=Inf", 0, "root", "_"),
    ("fires", "fire", "NOUN", "NNS", "Number=Plur", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, term="lightning")
sent(facts, [
    ("All", "all", "DET", "DT", "_", 2, "det", "_"),
    ("cats", "cat", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("sleep", "sleep", "VERB", "VBP", PRES, 0, "root", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, quantifier="All", term="cat")
sent(facts, [
    ("Some", "some", "DET", "DT", "_", 2, "det", "_"),
    ("metals", "metal", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("conduct", "conduct", "VERB", "VBP", PRES, 0, "root", "_"),
    ("electricity", "electricity", "NOUN", "NN", "Number=Sing", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, quantifier="Some", term="metal")
sent(facts, [
    ("Electric", "electric", "ADJ", "JJ", "_", 2, "amod", "_"),
    ("cars", "car", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("use", "use", "VERB", "VBP", PRES, 0, "root", "_"),
    ("batteries", "battery", "NOUN", "NNS", "Number=Plur", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, term="car")
sent(facts, [
    ("Tigers", "tiger", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("striped", "striped", "ADJ", "JJ", "_", 2, "acomp", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="tiger")
sent(facts, [
    ("Rice", "rice", "NOUN", "NN", "Number=Sing", 3, "nsubjpass", "_"),
    ("is", "be", "AUX", "VBZ", PRES, 3, "auxpass", "_"),
    ("grown", "grow", "VERB", "VBN", PART, 0, "root", "_"),
    ("in", "in", "ADP", "IN", "_", 3, "prep", "_"),
    ("paddies", "paddy", "NOUN", "NNS", "Number=Plur", 4, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, term="rice")
sent(facts, [
    ("Paris", "Paris", "PROPN", "NNP", "Number=Sing", 2, "compound",
     "Ent=GPE"),
    ("museums", "museum", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("attract", "attract", "VERB", "VBP", PRES, 0, "root", "_"),
    ("visitors", "visitor", "NOUN", "NNS", "Number=Plur", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, term="museum")
sent(facts, [
    ("Dogs", "dog", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("loyal", "loyal", "ADJ", "JJ", "_", 4, "amod", "_"),
    ("animals", "animal", "NOUN", "NNS", "Number=Plur", 2, "attr", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="dog")
sent(facts, [
    ("Murder", "murder", "NOUN", "NN", "Number=Sing", 2, "nsubj", "_"),
    ("is", "be", "AUX", "VBZ", PRES, 0, "root", "_"),
    ("illegal", "illegal", "ADJ", "JJ", "_", 2, "acomp", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="murder")

claims = doc("claims")
sent(claims, [
    ("Complications", "complication", "NOUN", "NNS", "Number=Plur", 2,
     "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("usually", "usually", "ADV", "RB", "_", 4, "advmod", "_"),
    ("infrequent", "infrequent", "ADJ", "JJ", "_", 2, "acomp", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="complication")
sent(claims, [
    ("All", "all", "DET", "DT", "_", 2, "det", "_"),
    ("results", "result", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("confidential", "confidential", "ADJ", "JJ", "_", 3, "acomp", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, quantifier="All", term="result")
sent(claims, [
    ("Meals", "meal", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("on", "on", "ADP", "IN", "_", 2, "prep", "_"),
    ("the", "the", "DET", "DT", "_", 6, "det", "_"),
    ("third", "third", "ADJ", "JJ", "NumType=Ord", 6, "amod", "_"),
    ("floor", "floor", "NOUN", "NN", "Number=Sing", 3, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="meal")
sent(claims, [
    ("Life", "life", "NOUN", "NN", "Number=Sing", 2, "nsubj", "_"),
    ("is", "be", "AUX", "VBZ", PRES, 0, "root", "_"),
    ("too", "too", "ADV", "RB", "_", 4, "advmod", "_"),
    ("serious", "serious", "ADJ", "JJ", "_", 2, "acomp", NSP),
    (",", ",", "PUNCT", ",", "_", 2, "punct", "_"),
    ("sometimes", "sometimes", "ADV", "RB", "_", 2, "advmod", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], True, term="life")
sent(claims, [
    ("All", "all", "DET", "DT", "_", 2, "det", "_"),
    ("cats", "cat", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("essentially", "essentially", "ADV", "RB", "_", 3, "advmod", "_"),
    ("cats", "cat", "NOUN", "NNS", "Number=Plur", 3, "attr", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, quantifier="All", term="cat")
sent(claims, [
    ("All", "all", "DET", "DT", "_", 2, "det", "_"),
    ("maps", "map", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("hand-drawn", "hand-drawn", "ADJ", "JJ", "_", 3, "acomp", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], True, quantifier="All", term="map")

rej1 = doc("rejects1")
sent(rej1, [
    ("He", "he", "PRON", "PRP", "PronType=Prs", 2, "nsubj", "_"),
    ("said", "say", "VERB", "VBD", PAST, 0, "root", "_"),
    ("the", "the", "DET", "DT", "_", 4, "det", "_"),
    ("project", "project", "NOUN", "NN", "Number=Sing", 5, "nsubj", "_"),
    ("was", "be", "AUX", "VBD", PAST, 2, "ccomp", "_"),
    ("on", "on", "ADP", "IN", "_", 5, "prep", "_"),
    ("track", "track", "NOUN", "NN", "Number=Sing", 6, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="has-no-bad-pronouns")
sent(rej1, [
    ("A", "a", "DET", "DT", "_", 3, "det", "_"),
    ("large", "large", "ADJ", "JJ", "_", 3, "amod", "_"),
    ("tree", "tree", "NOUN", "NN", "Number=Sing", 0, "root", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="has-no-bad-first-word")
sent(rej1, [
    ("A", "a", "DET", "DT", "_", 2, "det", "_"),
    ("man", "man", "NOUN", "NN", "Number=Sing", 3, "nsubj", "_"),
    ("said", "say", "VERB", "VBD", PAST, 0, "root", "_"),
    ("hello", "hello", "INTJ", "UH", "_", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="has-no-bad-first-word")
sent(rej1, [
    ("The", "the", "DET", "DT", "_", 2, "det", "_"),
    ("cat", "cat", "NOUN", "NN", "Number=Sing", 3, "nsubj", "_"),
    ("sat", "sit", "VERB", "VBD", PAST, 0, "root", "_"),
    ("on", "on", "ADP", "IN", "_", 3, "prep", "_"),
    ("the", "the", "DET", "DT", "_", 6, "det", "_"),
    ("mat", "mat", "NOUN", "NN", "Number=Sing", 4, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="has-no-bad-first-word")
sent(rej1, [
    ("A", "a", "DET", "DT", "_", 2, "det", "_"),
    ("bear", "bear", "NOUN", "NN", "Number=Sing", 4, "nsubj", "_"),
    ("is", "be", "AUX", "VBZ", PRES, 4, "aux", "_"),
    ("running", "run", "VERB", "VBG", GER, 0, "root", NSP),
    (".", ".", "PUNCT", ".", "_", 4, "punct", "_"),
], False, failed="has-no-bad-first-word")
sent(rej1, [
    ("Dogs", "dog", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 3, "aux", "_"),
    ("running", "run", "VERB", "VBG", GER, 0, "root", "_"),
    ("in", "in", "ADP", "IN", "_", 3, "prep", "_"),
    ("the", "the", "DET", "DT", "_", 6, "det", "_"),
    ("park", "park", "NOUN", "NN", "Number=Sing", 4, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="remove-present-participle-roots")
sent(rej1, [
    ("trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("plants", "plant", "NOUN", "NNS", "Number=Plur", 2, "attr", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="starts-with-capital")
sent(rej1, [
    ("Free", "free", "ADJ", "JJ", "_", 2, "amod", "_"),
    ("parking", "parking", "NOUN", "NN", "Number=Sing", 4, "nsubjpass", "_"),
    ("is", "be", "AUX", "VBZ", PRES, 4, "auxpass", "_"),
    ("provided", "provide", "VERB", "VBN", PART, 0, "root", "_"),
], False, failed="ends-with-period")
sent(rej1, [], False, failed="has-at-least-one-token", text="Ghost.")
sent(rej1, [
    ("Copyright", "copyright", "NOUN", "NN", "Number=Sing", 2, "compound",
     "_"),
    ("laws", "law", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("protect", "protect", "VERB", "VBP", PRES, 0, "root", "_"),
    ("authors", "author", "NOUN", "NNS", "Number=Plur", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="has-no-bad-words")
sent(rej1, [
    ("Snakes", "snake", "NOUN", "NNS", "Number=Plur", 4, "nsubj", "_"),
    ("do", "do", "AUX", "VBP", PRES, 4, "aux", "_"),
    ("not", "not", "PART", "RB", "Polarity=Neg", 4, "neg", "_"),
    ("have", "have", "VERB", "VB", "VerbForm=Inf", 0, "root", "_"),
    ("legs", "leg", "NOUN", "NNS", "Number=Plur", 4, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 4, "punct", "_"),
], False, failed="has-no-negations")
sent(rej1, [
    ("Students", "student", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("should", "should", "AUX", "MD", "VerbForm=Fin", 3, "aux", "_"),
    ("do", "do", "VERB", "VB", "VerbForm=Inf", 0, "root", "_"),
    ("homework", "homework", "NOUN", "NN", "Number=Sing", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="has-no-modals")
sent(rej1, [
    ("Take", "take", "VERB", "VB", "VerbForm=Inf", 0, "root", "_"),
    ("the", "the", "DET", "DT", "_", 3, "det", "_"),
    ("camera", "camera", "NOUN", "NN", "Number=Sing", 1, "dobj", "_"),
    ("home", "home", "ADV", "RB", "_", 1, "advmod", NSP),
    (".", ".", "PUNCT", ".", "_", 1, "punct", "_"),
], False, failed="first-word-is-not-verb")
sent(rej1, [
    ("And", "and", "CCONJ", "CC", "_", 3, "cc", "_"),
    ("trees", "tree", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("grow", "grow", "VERB", "VBP", PRES, 0, "root", "_"),
    ("tall", "tall", "ADJ", "JJ", "_", 3, "acomp", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="first-word-is-not-conjunction")

rej2 = doc("rejects2")
sent(rej2, [
    ("Forests", "forest", "NOUN", "NNS", "Number=Plur", 3, "nsubjpass", "_"),
    ("were", "be", "AUX", "VBD", PAST, 3, "auxpass", "_"),
    ("cleared", "clear", "VERB", "VBN", PART, 0, "root", "_"),
    ("for", "for", "ADP", "IN", "_", 3, "prep", "_"),
    ("farming", "farming", "NOUN", "NN", "Number=Sing", 4, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="has-acceptable-past-participle-root")
sent(rej2, [
    ("Red", "red", "ADJ", "JJ", "_", 2, "nsubj", "_"),
    ("is", "be", "AUX", "VBZ", PRES, 0, "root", "_"),
    ("a", "a", "DET", "DT", "_", 4, "det", "_"),
    ("color", "color", "NOUN", "NN", "Number=Sing", 2, "attr", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="noun-exists-before-root")
sent(rej2, [
    ("Meticulous", "meticulous", "NOUN", "NN", "Number=Sing", 2, "nsubj",
     "_"),
    ("means", "mean", "VERB", "VBZ", PRES, 0, "root", "_"),
    ("careful", "careful", "ADJ", "JJ", "_", 4, "amod", "_"),
    ("attention", "attention", "NOUN", "NN", "Number=Sing", 2, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="key-concept-head-pos-tags-not-contradicted-by-wordnet")
sent(rej2, [
    ("Insects", "insect", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("have", "have", "VERB", "VBP", PRES, 0, "root", "_"),
    ("6", "6", "NUM", "CD", "NumType=Card", 4, "nummod", "_"),
    ("legs", "leg", "NOUN", "NNS", "Number=Plur", 2, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="has-no-digits")
sent(rej2, [
    ("Blorptech", "Blorptech", "PROPN", "NNP", "Number=Sing", 2, "compound",
     "Ent=ORG"),
    ("factories", "factory", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("manufacture", "manufacture", "VERB", "VBP", PRES, 0, "root", "_"),
    ("robots", "robot", "NOUN", "NNS", "Number=Plur", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="all-propn-exist-in-wordnet")
sent(rej2, [
    ("Apple", "Apple", "PROPN", "NNP", "Number=Sing", 2, "compound",
     "Ent=ORG"),
    ("employees", "employee", "NOUN", "NNS", "Number=Plur", 3, "nsubj", "_"),
    ("make", "make", "VERB", "VBP", PRES, 0, "root", "_"),
    ("computers", "computer", "NOUN", "NNS", "Number=Plur", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="all-propn-have-acceptable-ne-labels")
sent(rej2, [
    ("Trees", "tree", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("grow", "grow", "VERB", "VBP", PRES, 0, "root", "_"),
    ("..", "..", "PUNCT", "NFP", "_", 2, "punct", "_"),
    ("slowly", "slowly", "ADV", "RB", "_", 2, "advmod", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="dot_dot_in_sentence")
sent(rej2, [
    ("Awwww", "awwww", "INTJ", "UH", "_", 4, "intj", NSP),
    (",", ",", "PUNCT", ",", "_", 4, "punct", "_"),
    ("kittens", "kitten", "NOUN", "NNS", "Number=Plur", 4, "nsubj", "_"),
    ("are", "be", "AUX", "VBP", PRES, 0, "root", "_"),
    ("cute", "cute", "ADJ", "JJ", "_", 4, "acomp", NSP),
    (".", ".", "PUNCT", ".", "_", 4, "punct", "_"),
], False, failed="www_in_sentence")
sent(rej2, [
    ("Companies", "company", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("sell", "sell", "VERB", "VBP", PRES, 0, "root", "_"),
    ("products", "product", "NOUN", "NNS", "Number=Plur", 2, "dobj", "_"),
    ("on", "on", "ADP", "IN", "_", 2, "prep", "_"),
    ("example.com", "example.com", "NOUN", "NN", "Number=Sing", 6,
     "compound", "_"),
    ("sites", "site", "NOUN", "NNS", "Number=Plur", 4, "pobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="com_in_sentence")
sent(rej2, [
    ("Well-known", "well-known", "ADJ", "JJ", "_", 2, "amod", "_"),
    ("story-tellers", "story-teller", "NOUN", "NNS", "Number=Plur", 3,
     "nsubj", "_"),
    ("entertain", "entertain", "VERB", "VBP", PRES, 0, "root", "_"),
    ("crowds", "crowd", "NOUN", "NNS", "Number=Plur", 3, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 3, "punct", "_"),
], False, failed="many_hyphens_in_sentence")
sent(rej2, [
    ("Forest", "forest", "NOUN", "NN", "Number=Sing", 2, "compound", "_"),
    ("trees", "tree", "NOUN", "NNS", "Number=Plur", 0, "root", "_"),
    ("everywhere", "everywhere", "ADV", "RB", "_", 2, "advmod", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="remove-non-verb-roots")
sent(rej2, [
    ("Dinosaurs", "dinosaur", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("roamed", "roam", "VERB", "VBD", PAST, 0, "root", "_"),
    ("the", "the", "DET", "DT", "_", 4, "det", "_"),
    ("earth", "earth", "NOUN", "NN", "Number=Sing", 2, "dobj", NSP),
    (".", ".", "PUNCT", ".", "_", 2, "punct", "_"),
], False, failed="remove-past-tense-roots")

# 101 tokens: fails the length rule before anything else.
long_tokens = [
    ("Scientists", "scientist", "NOUN", "NNS", "Number=Plur", 2, "nsubj", "_"),
    ("list", "list", "VERB", "VBP", PRES, 0, "root", "_"),
    ("facts", "fact", "NOUN", "NNS", "Number=Plur", 2, "dobj", "_"),
]
for _ in range(49):
    long_tokens.append(("and", "and", "CCONJ", "CC", "_", 3, "cc", "_"))
    long_tokens.append(
        ("facts", "fact", "NOUN", "NNS", "Number=Plur", 3, "conj", "_"))
sent(rej2, long_tokens, False, failed="is-short-enough")


def sent_text(tokens):
    parts = []
    for i, tok in enumerate(tokens):
        parts.append(tok[0])
        if "SpaceAfter=No" not in tok[7] and i + 1 < len(tokens):
            parts.append(" ")
    return "".join(parts)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "data/fixtures"
    conllu = []
    expected = []
    for d in DOCS:
        for idx, (tokens, retained, failed, quantifier, term,
                  text_override) in enumerate(d["sents"]):
            text = text_override if text_override else sent_text(tokens)
            if idx == 0:
                conllu.append(f"# newdoc id = {d['id']}")
            conllu.append(f"# sent_id = {idx}")
            conllu.append(f"# text = {text}")
            for tid, tok in enumerate(tokens, start=1):
                form, lemma, upos, xpos, feats, head, deprel, misc = tok
                conllu.append(
                    f"{tid}\t{form}\t{lemma}\t{upos}\t{xpos}\t{feats}\t"
                    f"{head}\t{deprel}\t_\t{misc}")
            conllu.append("")
            sid = f"golden:{d['id']}:{idx}"
            expected.append("\t".join([
                sid,
                "1" if retained else "0",
                failed or "-",
                quantifier or "-",
                term or "-",
            ]))
    with open(f"{out_dir}/golden.conllu", "w", encoding="utf-8") as f:
        f.write("\n".join(conllu) + "\n")
    with open(f"{out_dir}/golden_expected.tsv", "w", encoding="utf-8") as f:
        f.write("\n".join(expected) + "\n")
    n = sum(len(d["sents"]) for d in DOCS)
    print(f"golden corpus: {n} sentences in {len(DOCS)} docs")


if __name__ == "__main__":
    main()
