#include <algorithm>

#include <gtest/gtest.h>

#include "dyadic/formula.hpp"
#include "dyadic/syntax.hpp"

using namespace dyadic;

namespace {

const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");

bool contains(const std::vector<Formula>& fs, const Formula& f) { return std::find(fs.begin(), fs.end(), f) != fs.end(); }

}  // namespace

TEST(Formula, FactoriesExposeChildren) {
  const auto o = Formula::oblig(q, p);
  EXPECT_TRUE(o.is(Connective::Oblig));
  EXPECT_EQ(o.consequent(), q);
  EXPECT_EQ(o.antecedent(), p);
  const auto i = Formula::impl(p, q);
  EXPECT_EQ(i.left(), p);
  EXPECT_EQ(i.right(), q);
  EXPECT_EQ(Formula::neg(p).child(), p);
  EXPECT_EQ(Formula::atom("p").name(), "p");
}

TEST(Formula, StructuralEquality) {
  EXPECT_EQ(Formula::box(Formula::neg(p)), Formula::box(Formula::neg(Formula::atom("p"))));
  EXPECT_NE(Formula::oblig(p, q), Formula::oblig(q, p));
  EXPECT_NE(Formula::box(p), Formula::bet(p));
  EXPECT_EQ(Formula::impl(p, q).hash(), Formula::impl(p, q).hash());
}

TEST(Formula, OrderIsTotalAndConsistent) {
  std::vector<Formula> fs{Formula::impl(p, q), p, Formula::neg(q), q, Formula::box(p), Formula::oblig(p, q)};
  std::sort(fs.begin(), fs.end());
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) EXPECT_TRUE(fs[i] < fs[i + 1]);
  EXPECT_EQ(p <=> p, std::strong_ordering::equal);
}

TEST(Formula, SizeCountsSymbols) {
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(Formula::neg(p).size(), 2u);
  EXPECT_EQ(Formula::oblig(q, p).size(), 3u);
  EXPECT_EQ(Formula::impl(Formula::box(p), q).size(), 4u);
}

TEST(Formula, Complexity) {
  EXPECT_EQ(complexity(p), 0u);
  EXPECT_EQ(complexity(Formula::oblig(p, q)), 3u);
  EXPECT_EQ(complexity(Formula::box(Formula::neg(p))), 2u);
  EXPECT_EQ(complexity(Formula::impl(p, q)), 1u);
  EXPECT_EQ(complexity(Formula::bet(Formula::neg(p))), 2u);
  EXPECT_EQ(complexity(Formula::oblig(Formula::neg(p), Formula::box(q))), 5u);
}

TEST(Formula, SubPlusOfObligation) {
  const auto sp = sub_plus(Formula::oblig(q, p));
  EXPECT_EQ(sp.size(), 4u);
  EXPECT_TRUE(contains(sp, p));
  EXPECT_TRUE(contains(sp, q));
  EXPECT_TRUE(contains(sp, Formula::oblig(q, p)));
  EXPECT_TRUE(contains(sp, Formula::bet(Formula::neg(p))));
}

TEST(Formula, SubPlusOfAtomsAndNegations) {
  EXPECT_EQ(sub_plus(p), std::vector<Formula>{p});
  const auto sp = sub_plus(Formula::neg(p));
  EXPECT_EQ(sp.size(), 2u);
  EXPECT_TRUE(contains(sp, p));
  EXPECT_TRUE(contains(sp, Formula::neg(p)));
}

TEST(Formula, SubformulasAreDistinct) {
  const auto f = Formula::impl(p, Formula::impl(p, p));
  EXPECT_EQ(subformulas(f).size(), 3u);
}

TEST(Formula, ContainsBet) {
  EXPECT_FALSE(contains_bet(Formula::oblig(q, p)));
  EXPECT_TRUE(contains_bet(Formula::impl(p, Formula::bet(q))));
}

TEST(Formula, AtomsAreDistinctInFirstOccurrenceOrder) {
  const auto f = Formula::impl(Formula::atom("r"), Formula::oblig(p, Formula::atom("r")));
  EXPECT_EQ(atoms_of(f), (std::vector<std::string>{"r", "p"}));
}

TEST(Formula, DerivedConstants) {
  const auto p0 = Formula::atom(reserved_atom_name());
  EXPECT_EQ(top(), Formula::impl(p0, p0));
  EXPECT_EQ(bottom(), conj(p0, Formula::neg(p0)));
  EXPECT_NE(bottom(), Formula::neg(top()));
  EXPECT_EQ(conj_all({}), top());
  EXPECT_EQ(disj_all({}), bottom());
  EXPECT_EQ(conj_all({p}), p);
  EXPECT_EQ(disj_all({q}), q);
}

TEST(Formula, DerivedConnectives) {
  EXPECT_EQ(conj(p, q), Formula::neg(Formula::impl(p, Formula::neg(q))));
  EXPECT_EQ(disj(p, q), Formula::impl(Formula::neg(p), q));
  EXPECT_EQ(diamond(p), Formula::neg(Formula::box(Formula::neg(p))));
  EXPECT_EQ(iff(p, q), conj(Formula::impl(p, q), Formula::impl(q, p)));
}
