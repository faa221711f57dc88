#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "errors.hpp"
#include "ingest.hpp"
#include "test_util.hpp"

using namespace gmine;

namespace {

std::vector<SentenceRecord> plaintext_records(const std::string &content,
                                              int window) {
  std::istringstream in(content);
  std::vector<SentenceRecord> out;
  read_plaintext_stream(in, "src", window,
                        [&](SentenceRecord &&r) { out.push_back(r); });
  return out;
}

std::vector<AnnotatedSentence> conllu_sentences(const std::string &content,
                                                int window = 2) {
  std::istringstream in(content);
  std::vector<AnnotatedSentence> out;
  read_conllu_stream(in, "<mem>", "src", window,
                     [&](AnnotatedSentence &&s) { out.push_back(s); });
  return out;
}

}  // namespace

TEST_CASE("plaintext context windows") {
  SUBCASE("three-line doc, middle line") {
    auto recs = plaintext_records("line one\nline two\nline three\n", 2);
    REQUIRE(recs.size() == 3);
    CHECK(recs[1].before == std::vector<std::string>{"line one"});
    CHECK(recs[1].after == std::vector<std::string>{"line three"});
  }
  SUBCASE("single-line doc") {
    auto recs = plaintext_records("only line\n", 2);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].before.empty());
    CHECK(recs[0].after.empty());
  }
  SUBCASE("five-line doc, full windows") {
    auto recs = plaintext_records("l1\nl2\nl3\nl4\nl5\n", 2);
    REQUIRE(recs.size() == 5);
    CHECK(recs[2].before == std::vector<std::string>{"l1", "l2"});
    CHECK(recs[2].after == std::vector<std::string>{"l4", "l5"});
    CHECK(recs[0].before.empty());
    CHECK(recs[4].after.empty());
  }
  SUBCASE("windows stop at document boundaries") {
    auto recs = plaintext_records("a1\na2\n\nb1\nb2\n", 1);
    REQUIRE(recs.size() == 4);
    CHECK(recs[1].after.empty());      // a2 is last in doc
    CHECK(recs[2].before.empty());     // b1 is first in doc
    CHECK(recs[0].doc_id != recs[2].doc_id);
    CHECK(recs[2].index_in_doc == 0);
  }
}

TEST_CASE("window shift invariant: after(i) == before(i+1) shifted") {
  auto recs = plaintext_records("s1\ns2\ns3\ns4\ns5\ns6\n", 2);
  for (size_t i = 0; i + 1 < recs.size(); ++i) {
    // after-window of i starts with the next record's text, and the next
    // record's before-window ends with record i's text.
    REQUIRE(!recs[i].after.empty());
    CHECK(recs[i].after.front() == recs[i + 1].text);
    REQUIRE(!recs[i + 1].before.empty());
    CHECK(recs[i + 1].before.back() == recs[i].text);
  }
}

TEST_CASE("plaintext skips invalid UTF-8 lines and counts them") {
  std::istringstream in("good line\nbad \xff\xfe line\nanother good\n");
  IngestCounters c;
  std::vector<SentenceRecord> out;
  read_plaintext_stream(in, "src", 2,
                        [&](SentenceRecord &&r) { out.push_back(r); }, &c);
  CHECK(out.size() == 2);
  CHECK(c.encoding_errors == 1);
  CHECK(c.records == 2);
}

TEST_CASE("conllu parsing maps columns and heads") {
  std::string content =
      "# newdoc id = d\n"
      "# sent_id = 0\n"
      "# text = Trees grow.\n"
      "1\tTrees\ttree\tNOUN\tNNS\tNumber=Plur\t2\tnsubj\t_\tEnt=_\n"
      "2\tgrow\tgrow\tVERB\tVBP\t_\t0\troot\t_\t_\n"
      "3\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n\n";
  auto sents = conllu_sentences(content);
  REQUIRE(sents.size() == 1);
  const AnnotatedSentence &s = sents[0];
  REQUIRE(s.tokens.size() == 3);
  CHECK(s.record.text == "Trees grow.");
  CHECK(s.tokens[0].lemma == "tree");
  CHECK(s.tokens[0].upos == "NOUN");
  CHECK(s.tokens[0].head == 1);
  CHECK(s.tokens[0].ne_label.empty());  // Ent=_ means no label
  CHECK(s.tokens[1].head == AnnotatedToken::kRoot);
  CHECK(s.root_index() == 1);
}

TEST_CASE("conllu Ent labels and multiword ranges") {
  std::string content =
      "# text = Paris won't\n"
      "1\tParis\tParis\tPROPN\tNNP\t_\t2\tnsubj\t_\tEnt=GPE\n"
      "2-3\twon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "2\two\twill\tAUX\tMD\t_\t0\troot\t_\t_\n"
      "3\tn't\tnot\tPART\tRB\t_\t2\tneg\t_\t_\n\n";
  auto sents = conllu_sentences(content);
  REQUIRE(sents.size() == 1);
  CHECK(sents[0].tokens.size() == 3);  // range line skipped
  CHECK(sents[0].tokens[0].ne_label == "GPE");
  CHECK(sents[0].tokens[2].surface == "n't");
}

TEST_CASE("conllu errors carry line numbers") {
  SUBCASE("wrong column count") {
    CHECK_THROWS_AS(conllu_sentences("1\tonly\tthree\n\n"), ParseError);
  }
  SUBCASE("head out of range") {
    std::string content =
        "# text = X.\n"
        "1\tX\tx\tNOUN\tNN\t_\t9\tnsubj\t_\t_\n\n";
    CHECK_THROWS_AS(conllu_sentences(content), ParseError);
  }
  SUBCASE("no root") {
    std::string content =
        "# text = X y.\n"
        "1\tX\tx\tNOUN\tNN\t_\t2\tnsubj\t_\t_\n"
        "2\ty\ty\tVERB\tVB\t_\t1\troot\t_\t_\n\n";
    CHECK_THROWS_AS(conllu_sentences(content), ParseError);
  }
}

TEST_CASE("golden corpus round-trips byte-identically") {
  std::string original = testutil::read_file(testutil::fixture("golden.conllu"));
  REQUIRE(!original.empty());
  auto first = conllu_sentences(original);
  CHECK(first.size() == 50);
  std::string serialized = serialize_conllu(first);
  CHECK(serialized == original);
  auto second = conllu_sentences(serialized);
  REQUIRE(second.size() == first.size());
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(second[i].tokens == first[i].tokens);
    CHECK(second[i].record.text == first[i].record.text);
    CHECK(second[i].record.doc_id == first[i].record.doc_id);
  }
}

TEST_CASE("conllu context windows follow newdoc boundaries") {
  std::string original = testutil::read_file(testutil::fixture("golden.conllu"));
  auto sents = conllu_sentences(original, 2);
  // First sentence of the "facts" doc must not see "trees" doc context.
  for (const auto &s : sents) {
    if (s.record.doc_id == "facts" && s.record.index_in_doc == 0) {
      CHECK(s.record.before.empty());
      REQUIRE(s.record.after.size() == 2);
      CHECK(s.record.after[0] == "Lightning can start fires.");
    }
    if (s.record.doc_id == "trees" && s.record.index_in_doc == 2) {
      REQUIRE(s.record.before.size() == 2);
      CHECK(s.record.before[1] ==
            "Trees are woody plants which continue growing until they die.");
    }
  }
}

TEST_CASE("manifest parsing") {
  testutil::TempDir tmp("manifest");
  testutil::write_file(tmp.file("m.tsv"),
                       "# comment\nsrc1\tcorpus.txt\tplaintext\n"
                       "src2\t/abs/c.conllu\tconllu\n");
  auto entries = read_manifest(tmp.file("m.tsv"));
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].source_id == "src1");
  CHECK(entries[0].path == tmp.str() + "/corpus.txt");  // relative resolved
  CHECK(entries[1].path == "/abs/c.conllu");

  testutil::write_file(tmp.file("bad.tsv"), "a\tb\tnot-a-format\n");
  CHECK_THROWS_AS(read_manifest(tmp.file("bad.tsv")), ParseError);
}

TEST_CASE("shard assignment") {
  std::vector<ManifestEntry> manifest = {{"s", "p", "plaintext"}};
  SUBCASE("n_shards=1 is the identity partition") {
    auto shards = shard(manifest, 1);
    REQUIRE(shards.size() == 1);
    for (int d = 0; d < 50; ++d)
      CHECK(shards[0].wants_doc("s", "d" + std::to_string(d)));
  }
  SUBCASE("assignment is deterministic and partitions the docs") {
    auto a = shard(manifest, 4);
    auto b = shard(manifest, 4);
    for (int d = 0; d < 100; ++d) {
      std::string doc = "d" + std::to_string(d);
      int owners = 0;
      for (int s = 0; s < 4; ++s) {
        CHECK(a[s].wants_doc("s", doc) == b[s].wants_doc("s", doc));
        if (a[s].wants_doc("s", doc)) ++owners;
      }
      CHECK(owners == 1);  // whole docs, exactly one shard
    }
  }
  SUBCASE("100 docs over 4 shards stay within 50% of the mean") {
    auto shards = shard(manifest, 4);
    std::vector<int> counts(4, 0);
    for (int d = 0; d < 100; ++d)
      for (int s = 0; s < 4; ++s)
        if (shards[s].wants_doc("s", "d" + std::to_string(d))) ++counts[s];
    for (int s = 0; s < 4; ++s) {
      CHECK(counts[s] >= 13);  // mean 25 +/- 50%
      CHECK(counts[s] <= 38);
    }
  }
  SUBCASE("n_shards must be positive") {
    CHECK_THROWS_AS(shard(manifest, 0), ConfigError);
  }
}

TEST_CASE("sharded plaintext readers cover the input exactly once") {
  std::string corpus;
  for (int d = 0; d < 20; ++d) {
    for (int l = 0; l < 3; ++l)
      corpus += "doc " + std::to_string(d) + " line " + std::to_string(l) + "\n";
    corpus += "\n";
  }
  std::vector<ManifestEntry> manifest = {{"s", "p", "plaintext"}};
  auto shards = shard(manifest, 3);
  size_t total = 0;
  for (const auto &sd : shards) {
    std::istringstream in(corpus);
    read_plaintext_stream(in, "s", 2, [&](SentenceRecord &&) { ++total; },
                          nullptr, &sd);
  }
  CHECK(total == 60);
}
