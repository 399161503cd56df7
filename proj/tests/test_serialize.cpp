#include <gtest/gtest.h>

#include "dyadic/search.hpp"
#include "dyadic/serialize.hpp"
#include "dyadic/syntax.hpp"

using namespace dyadic;

TEST(Serialize, HypersequentRoundTrip) {
  const Hypersequent h{{make_sequent({parse("[]p"), parse("O(q/p)")}, {parse("p -> q")}), make_sequent({}, {})}};
  const auto j = to_json(h);
  EXPECT_EQ(j.dump(), R"j({"components":[{"ant":["[]p","O(q/p)"],"suc":["p -> q"]},{"ant":[],"suc":[]}]})j");
  EXPECT_EQ(hypersequent_from_json(j), h);
}

TEST(Serialize, HypersequentKeepsDuplicates) {
  const auto h = hypersequent_from_json(Json::parse(R"({"components":[{"ant":["p","p"],"suc":[]}]})"));
  EXPECT_EQ(h[0].ant.size(), 2u);
}

TEST(Serialize, ModelRoundTrip) {
  auto m = PreferenceModel::with_worlds(2);
  m.set_better(2, 1);
  m.set_true(1, "k");
  m.set_true(1, "g");
  const auto j = to_json(m);
  EXPECT_EQ(j.dump(), R"({"worlds":[1,2],"succ":[[2,1]],"valuation":{"1":["g","k"],"2":[]}})");
  EXPECT_EQ(model_from_json(j), m);
}

TEST(Serialize, ProofRoundTrip) {
  const auto v = decide_formula(parse("[]p -> p"));
  ASSERT_TRUE(v.proven());
  const auto j = to_json(v.proof().proof);
  EXPECT_EQ(j["rule"], "ImplR");
  EXPECT_EQ(j["principal"]["component"], 1);
  EXPECT_TRUE(j["principal"]["secondary"].is_null());
  EXPECT_EQ(proof_from_json(j), v.proof().proof);
}

TEST(Serialize, LeafShape) {
  const ProofNode leaf{Hypersequent{{make_sequent({parse("p")}, {parse("p")})}}, std::nullopt, {}};
  const auto j = to_json(leaf);
  EXPECT_TRUE(j["rule"].is_null());
  EXPECT_TRUE(j["principal"].is_null());
  EXPECT_TRUE(j["children"].empty());
  EXPECT_EQ(proof_from_json(j), leaf);
}

TEST(Serialize, SchemaErrors) {
  EXPECT_THROW(hypersequent_from_json(Json::parse(R"({"comps":[]})")), SchemaError);
  EXPECT_THROW(hypersequent_from_json(Json::parse(R"({"components":[{"ant":[1],"suc":[]}]})")), SchemaError);
  EXPECT_THROW(hypersequent_from_json(Json::parse(R"({"components":[{"ant":["p ->"],"suc":[]}]})")), SchemaError);
  const char* no_children = R"({"conclusion":{"components":[]},"rule":null,"principal":null})";
  EXPECT_THROW(proof_from_json(Json::parse(no_children)), SchemaError);
  const char* zero_component =
      R"({"conclusion":{"components":[]},"rule":"NegL","principal":{"component":0,"formula":"~p"},"children":[]})";
  EXPECT_THROW(proof_from_json(Json::parse(zero_component)), SchemaError);
  EXPECT_THROW(model_from_json(Json::parse(R"({"worlds":[1],"valuation":{}})")), SchemaError);
  EXPECT_THROW(model_from_json(Json::parse(R"({"worlds":[1],"succ":[[1]],"valuation":{}})")), SchemaError);
  EXPECT_THROW(model_from_json(Json::parse(R"({"worlds":[1],"succ":[],"valuation":{"1":[3]}})")), SchemaError);
}

TEST(Serialize, VerdictSummary) {
  const auto refuted = to_json(decide_formula(parse("[]p")));
  EXPECT_EQ(refuted["verdict"], "refuted");
  EXPECT_EQ(refuted["falsifying_world"], 1);
  EXPECT_TRUE(refuted.contains("model"));
  const auto proven = to_json(decide_formula(parse("p -> p")));
  EXPECT_EQ(proven["verdict"], "proven");
  for (const char* key : {"max_components", "max_component_formulas", "max_branch_length", "nodes_expanded"}) {
    EXPECT_TRUE(proven["stats"].contains(key)) << key;
  }
}
