#include <sstream>

#include <gtest/gtest.h>

#include "dyadic/corpus.hpp"
#include "dyadic/proofcheck.hpp"
#include "dyadic/search.hpp"

using namespace dyadic;

namespace {

std::string corpus_path(const char* name) { return std::string(DYADIC_SOURCE_DIR) + "/corpus/" + name; }

std::vector<CorpusEntry> parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in, "test");
}

}  // namespace

TEST(CorpusFormat, ParsesRecords) {
  const auto entries = parse_text(
      "# comment\n"
      "name: a\ninput: p -> p\nexpect: proven\nnotes: trivial\n"
      "\n\n"
      "name: b\ninput: p |- q\nexpect: refuted\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].name, "a");
  EXPECT_EQ(entries[0].input, "p -> p");
  EXPECT_EQ(entries[0].expected, Expectation::Proven);
  EXPECT_EQ(entries[0].notes, "trivial");
  EXPECT_EQ(entries[1].expected, Expectation::Refuted);
}

TEST(CorpusFormat, Errors) {
  EXPECT_THROW(parse_text("name: a\ninput: p\nexpect: proven\n\nname: a\ninput: q\nexpect: proven\n"), CorpusError);
  EXPECT_THROW(parse_text("name: a\nexpect: proven\n"), CorpusError);
  EXPECT_THROW(parse_text("name: a\ninput: p\n"), CorpusError);
  EXPECT_THROW(parse_text("name: a\ninput: p\nexpect: maybe\n"), CorpusError);
  EXPECT_THROW(parse_text("name: a\ninput: p\nexpect: proven\ncolour: red\n"), CorpusError);
  EXPECT_THROW(parse_text("just words\n"), CorpusError);
  EXPECT_THROW(load_corpus(corpus_path("missing.txt")), CorpusError);
}

TEST(CorpusFormat, ErrorsNameTheLine) {
  try {
    parse_text("name: a\ninput: p\nexpect: perhaps\n");
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_NE(std::string(e.what()).find("test:3:"), std::string::npos) << e.what();
  }
}

TEST(ParseRoot, FormulaOrSequent) {
  EXPECT_EQ(parse_root("p -> q"), make_sequent({}, {parse("p -> q")}));
  EXPECT_EQ(parse_root("p, q |- r"), make_sequent({parse("p"), parse("q")}, {parse("r")}));
}

class ShippedCorpus : public ::testing::TestWithParam<const char*> {};

TEST_P(ShippedCorpus, EveryEntryMatchesItsExpectation) {
  const auto entries = load_corpus(corpus_path(GetParam()));
  ASSERT_FALSE(entries.empty());
  for (const auto& e : entries) {
    const auto root = parse_root(e.input);
    const auto v = decide(root);
    EXPECT_EQ(v.proven(), e.expected == Expectation::Proven) << e.name;
    if (v.proven()) {
      EXPECT_TRUE(check(v.proof().proof, CheckedCalculus::HEPlus).ok) << e.name;
    } else {
      const auto& r = v.refutation();
      EXPECT_TRUE(truth_lemma_check(r.saturated, r.model)) << e.name;
      EXPECT_FALSE(eval(r.model, r.falsifying_world, as_formula(root))) << e.name;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Files, ShippedCorpus,
                         ::testing::Values("axioms.txt", "paper-derivations.txt", "ctd-gentle-murder.txt",
                                           "nonvalid-principles.txt"));
