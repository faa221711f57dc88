#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "corpus_gen.hpp"
#include "errors.hpp"
#include "ingest.hpp"
#include "lexicon.hpp"
#include "rule_engine.hpp"
#include "test_util.hpp"

using namespace gmine;

namespace {

const Lexicon &lex() {
  static Lexicon instance = Lexicon::load(testutil::data_dir() + "/wordnet",
                                          testutil::data_dir() + "/wordlists");
  return instance;
}

struct Expected {
  bool retained;
  std::string failed_rule;  // "-" when retained
  std::string quantifier;   // "-" when absent
  std::string term;         // "-" when not checked
};

std::map<std::string, Expected> load_expected() {
  std::ifstream in(testutil::fixture("golden_expected.tsv"));
  REQUIRE(in);
  std::map<std::string, Expected> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cols = split(line, '\t');
    REQUIRE(cols.size() == 5);
    out[cols[0]] = {cols[1] == "1", cols[2], cols[3], cols[4]};
  }
  return out;
}

std::vector<AnnotatedSentence> load_golden() {
  std::vector<AnnotatedSentence> out;
  read_conllu(testutil::fixture("golden.conllu"), "golden", 2,
              [&](AnnotatedSentence &&s) { out.push_back(std::move(s)); });
  return out;
}

AnnotatedSentence parse_one(const std::string &conllu) {
  std::istringstream in(conllu);
  std::vector<AnnotatedSentence> out;
  read_conllu_stream(in, "<mem>", "t", 2,
                     [&](AnnotatedSentence &&s) { out.push_back(s); });
  REQUIRE(out.size() == 1);
  return out[0];
}

}  // namespace

TEST_CASE("ruleset carries all 27 rules with unique names") {
  auto rules = default_ruleset();
  CHECK(rules.size() == 27);
  std::set<std::string> names;
  size_t must_pass = 0;
  for (const Rule &r : rules) {
    names.insert(r.name);
    if (r.polarity == Polarity::MustPass) ++must_pass;
  }
  CHECK(names.size() == 27);
  CHECK(must_pass == 18);
  // Listed order: the must-pass block precedes the must-fail block.
  CHECK(rules.front().name == "is-short-enough");
  CHECK(rules[17].name == "all-propn-have-acceptable-ne-labels");
  CHECK(rules[18].name == "dot_dot_in_sentence");
  CHECK(rules.back().name == "remove-past-tense-roots");
}

TEST_CASE("golden corpus: verdicts, failing rules, quantifiers, terms") {
  auto rules = default_ruleset();
  auto expected = load_expected();
  auto sentences = load_golden();
  REQUIRE(sentences.size() == expected.size());

  for (const AnnotatedSentence &s : sentences) {
    const Expected &want = expected.at(s.record.sid());
    RuleVerdict v = evaluate(s, lex(), rules);
    INFO("sid ", s.record.sid(), ": ", s.record.text);
    CHECK(v.retained == want.retained);
    CHECK((v.failed_rule ? *v.failed_rule : "-") == want.failed_rule);
    CHECK((v.quantifier ? *v.quantifier : "-") == want.quantifier);
    if (want.retained) {
      CHECK(extract_term(s, lex()) == want.term);
    }
  }
}

TEST_CASE("evaluate is deterministic") {
  auto rules = default_ruleset();
  for (const AnnotatedSentence &s : load_golden()) {
    RuleVerdict a = evaluate(s, lex(), rules);
    RuleVerdict b = evaluate(s, lex(), rules);
    CHECK(a.retained == b.retained);
    CHECK(a.failed_rule == b.failed_rule);
    CHECK(a.quantifier == b.quantifier);
  }
}

TEST_CASE("retained quantifiers come from the positive list") {
  auto rules = default_ruleset();
  for (const AnnotatedSentence &s : load_golden()) {
    RuleVerdict v = evaluate(s, lex(), rules);
    if (v.retained && v.quantifier)
      CHECK(lex().wordlists().positive_quantifiers.count(
          to_lower(*v.quantifier)));
  }
}

TEST_CASE("strip_quantifier") {
  SUBCASE("Figure-style quantifier sentence") {
    AnnotatedSentence s = parse_one(
        "# text = Most trees add one new ring for each year of growth.\n"
        "1\tMost\tmost\tADJ\tJJS\tDegree=Sup\t2\tamod\t_\t_\n"
        "2\ttrees\ttree\tNOUN\tNNS\t_\t3\tnsubj\t_\t_\n"
        "3\tadd\tadd\tVERB\tVBP\tTense=Pres|VerbForm=Fin\t0\troot\t_\t_\n"
        "4\tone\tone\tNUM\tCD\t_\t6\tnummod\t_\t_\n"
        "5\tnew\tnew\tADJ\tJJ\t_\t6\tamod\t_\t_\n"
        "6\tring\tring\tNOUN\tNN\t_\t3\tdobj\t_\t_\n"
        "7\tfor\tfor\tADP\tIN\t_\t3\tprep\t_\t_\n"
        "8\teach\teach\tDET\tDT\t_\t9\tdet\t_\t_\n"
        "9\tyear\tyear\tNOUN\tNN\t_\t7\tpobj\t_\t_\n"
        "10\tof\tof\tADP\tIN\t_\t9\tprep\t_\t_\n"
        "11\tgrowth\tgrowth\tNOUN\tNN\t_\t10\tpobj\t_\tSpaceAfter=No\n"
        "12\t.\t.\tPUNCT\t.\t_\t3\tpunct\t_\t_\n\n");
    auto [q, stripped] = strip_quantifier(s, lex());
    CHECK(q == "Most");
    CHECK(stripped.record.text ==
          "Trees add one new ring for each year of growth.");
    CHECK(stripped.tokens[0].surface == "Trees");

    // Oracle: hand-annotated stripped sentence must match head-for-head.
    AnnotatedSentence reparsed = parse_one(
        "# text = Trees add one new ring for each year of growth.\n"
        "1\tTrees\ttree\tNOUN\tNNS\t_\t2\tnsubj\t_\t_\n"
        "2\tadd\tadd\tVERB\tVBP\tTense=Pres|VerbForm=Fin\t0\troot\t_\t_\n"
        "3\tone\tone\tNUM\tCD\t_\t5\tnummod\t_\t_\n"
        "4\tnew\tnew\tADJ\tJJ\t_\t5\tamod\t_\t_\n"
        "5\tring\tring\tNOUN\tNN\t_\t2\tdobj\t_\t_\n"
        "6\tfor\tfor\tADP\tIN\t_\t2\tprep\t_\t_\n"
        "7\teach\teach\tDET\tDT\t_\t8\tdet\t_\t_\n"
        "8\tyear\tyear\tNOUN\tNN\t_\t6\tpobj\t_\t_\n"
        "9\tof\tof\tADP\tIN\t_\t8\tprep\t_\t_\n"
        "10\tgrowth\tgrowth\tNOUN\tNN\t_\t9\tpobj\t_\tSpaceAfter=No\n"
        "11\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n\n");
    REQUIRE(stripped.tokens.size() == reparsed.tokens.size());
    for (size_t i = 0; i < stripped.tokens.size(); ++i) {
      CHECK(stripped.tokens[i].surface == reparsed.tokens[i].surface);
      CHECK(stripped.tokens[i].head == reparsed.tokens[i].head);
    }
  }
  SUBCASE("mechanical removal") {
    AnnotatedSentence s = parse_one(
        "# text = All cats sleep.\n"
        "1\tAll\tall\tDET\tDT\t_\t2\tdet\t_\t_\n"
        "2\tcats\tcat\tNOUN\tNNS\t_\t3\tnsubj\t_\t_\n"
        "3\tsleep\tsleep\tVERB\tVBP\tTense=Pres|VerbForm=Fin\t0\troot\t_"
        "\tSpaceAfter=No\n"
        "4\t.\t.\tPUNCT\t.\t_\t3\tpunct\t_\t_\n\n");
    auto [q, stripped] = strip_quantifier(s, lex());
    CHECK(q == "All");
    CHECK(stripped.record.text == "Cats sleep.");
    CHECK(stripped.root_index() == 1);
  }
  SUBCASE("non-quantifier first word throws") {
    AnnotatedSentence s = parse_one(
        "# text = Trees grow.\n"
        "1\tTrees\ttree\tNOUN\tNNS\t_\t2\tnsubj\t_\t_\n"
        "2\tgrow\tgrow\tVERB\tVBP\t_\t0\troot\t_\t_\n"
        "3\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n\n");
    CHECK_THROWS_AS(strip_quantifier(s, lex()), NotAQuantifier);
  }
}

TEST_CASE("extract_term picks the nsubj head, with noun fallback") {
  SUBCASE("single-noun subject") {
    AnnotatedSentence s = parse_one(
        "# text = Trees grow.\n"
        "1\tTrees\ttree\tNOUN\tNNS\t_\t2\tnsubj\t_\t_\n"
        "2\tgrow\tgrow\tVERB\tVBP\t_\t0\troot\t_\t_\n"
        "3\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n\n");
    CHECK(extract_term(s, lex()) == "tree");
  }
  SUBCASE("nsubj head wins over modifier") {
    AnnotatedSentence s = parse_one(
        "# text = Electric cars use batteries.\n"
        "1\tElectric\telectric\tADJ\tJJ\t_\t2\tamod\t_\t_\n"
        "2\tcars\tcar\tNOUN\tNNS\t_\t3\tnsubj\t_\t_\n"
        "3\tuse\tuse\tVERB\tVBP\t_\t0\troot\t_\t_\n"
        "4\tbatteries\tbattery\tNOUN\tNNS\t_\t3\tdobj\t_\t_\n"
        "5\t.\t.\tPUNCT\t.\t_\t3\tpunct\t_\t_\n\n");
    CHECK(extract_term(s, lex()) == "car");
  }
  SUBCASE("fallback: last noun before the root") {
    AnnotatedSentence s = parse_one(
        "# text = Forest trees everywhere.\n"
        "1\tForest\tforest\tNOUN\tNN\t_\t2\tcompound\t_\t_\n"
        "2\ttrees\ttree\tNOUN\tNNS\t_\t0\troot\t_\t_\n"
        "3\teverywhere\teverywhere\tADV\tRB\t_\t2\tadvmod\t_\t_\n"
        "4\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n\n");
    CHECK(extract_term(s, lex()) == "forest");
  }
  SUBCASE("no key concept throws") {
    AnnotatedSentence s = parse_one(
        "# text = Sleep.\n"
        "1\tSleep\tsleep\tVERB\tVB\t_\t0\troot\t_\t_\n"
        "2\t.\t.\tPUNCT\t.\t_\t1\tpunct\t_\t_\n\n");
    CHECK_THROWS_AS(extract_term(s, lex()), NoKeyConcept);
  }
}

TEST_CASE("token-count boundary: 100 passes, 101 fails") {
  auto rules = default_ruleset();
  auto build = [&](int n) {
    AnnotatedSentence s;
    s.tokens.push_back(testgen::tok("Cats", "cat", "NOUN", "NNS", "_", 1,
                                    "nsubj"));
    s.tokens.push_back(testgen::tok("chase", "chase", "VERB", "VBP",
                                    "Tense=Pres|VerbForm=Fin",
                                    AnnotatedToken::kRoot, "root"));
    while ((int)s.tokens.size() < n - 1)
      s.tokens.push_back(
          testgen::tok("mice", "mouse", "NOUN", "NNS", "_", 1, "dobj"));
    s.tokens.push_back(testgen::tok(".", ".", "PUNCT", ".", "_", 1, "punct"));
    testgen::finish(s);
    return s;
  };
  RuleVerdict ok = evaluate(build(100), lex(), rules);
  CHECK(ok.retained);
  RuleVerdict bad = evaluate(build(101), lex(), rules);
  CHECK(!bad.retained);
  CHECK(*bad.failed_rule == "is-short-enough");
}

TEST_CASE("unannotated input in full mode raises MissingAnnotation") {
  SentenceRecord rec;
  rec.text = "Trees grow tall.";
  AnnotatedSentence degraded = degrade(rec);
  CHECK_THROWS_AS(evaluate(degraded, lex(), default_ruleset(), EvalMode::Full),
                  MissingAnnotation);
}

TEST_CASE("degraded mode runs surface rules only") {
  auto rules = default_ruleset();
  auto verdict = [&](const std::string &text) {
    SentenceRecord rec;
    rec.text = text;
    return evaluate(degrade(rec), lex(), rules, EvalMode::Degraded);
  };
  SUBCASE("surface rejections still fire") {
    CHECK(!verdict("A large tree.").retained);
    CHECK(*verdict("A large tree.").failed_rule == "has-no-bad-first-word");
    CHECK(*verdict("He said things.").failed_rule == "has-no-bad-pronouns");
    CHECK(*verdict("Insects have 6 legs.").failed_rule == "has-no-digits");
    CHECK(*verdict("no caps here.").failed_rule == "starts-with-capital");
  }
  SUBCASE("syntax-only rejections are vacuously passed") {
    RuleVerdict v = verdict("Dogs are running in the park.");
    CHECK(v.retained);  // participle root not visible without a parse
    CHECK(v.mode == EvalMode::Degraded);
  }
  SUBCASE("quantifiers still strip") {
    RuleVerdict v = verdict("Most trees add rings.");
    CHECK(v.retained);
    REQUIRE(v.quantifier);
    CHECK(*v.quantifier == "Most");
    CHECK(v.stripped);
  }
}

TEST_CASE("ruleset config toggles rules by name") {
  testutil::TempDir tmp("ruleset");
  testutil::write_file(tmp.file("rules.conf"),
                       "# disable the digit rule\nhas-no-digits off\n");
  auto rules = load_ruleset(tmp.file("rules.conf"));
  CHECK(rules.size() == 26);
  AnnotatedSentence s;
  s.tokens.push_back(testgen::tok("Insects", "insect", "NOUN", "NNS", "_", 1,
                                  "nsubj"));
  s.tokens.push_back(testgen::tok("have", "have", "VERB", "VBP",
                                  "Tense=Pres|VerbForm=Fin",
                                  AnnotatedToken::kRoot, "root"));
  s.tokens.push_back(testgen::tok("6", "6", "NUM", "CD", "_", 3, "nummod"));
  s.tokens.push_back(testgen::tok("legs", "leg", "NOUN", "NNS", "_", 1, "dobj"));
  s.tokens.push_back(testgen::tok(".", ".", "PUNCT", ".", "_", 1, "punct"));
  testgen::finish(s);
  CHECK(evaluate(s, lex(), rules).retained);
  CHECK(!evaluate(s, lex(), default_ruleset()).retained);

  testutil::write_file(tmp.file("bad.conf"), "no-such-rule off\n");
  CHECK_THROWS_AS(load_ruleset(tmp.file("bad.conf")), ParseError);
}

TEST_CASE("permuting the ruleset never changes the retained set") {
  auto base = default_ruleset();
  std::vector<AnnotatedSentence> corpus = load_golden();
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 1000; ++i) corpus.push_back(testgen::random_sentence(rng));

  std::vector<bool> baseline;
  baseline.reserve(corpus.size());
  for (const auto &s : corpus)
    baseline.push_back(evaluate(s, lex(), base).retained);

  for (int perm = 0; perm < 12; ++perm) {
    auto shuffled = base;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (size_t i = 0; i < corpus.size(); ++i) {
      RuleVerdict v = evaluate(corpus[i], lex(), shuffled);
      if (v.retained != baseline[i]) {
        INFO("perm ", perm, " sentence: ", corpus[i].record.text);
        REQUIRE(v.retained == baseline[i]);
      }
    }
  }
}
