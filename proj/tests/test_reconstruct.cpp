#include <gtest/gtest.h>

#include "beauville/beauville.hpp"

using namespace beauville;

TEST(Word, FreeReduction) {
  auto a = Word::letter('a'), b = Word::letter('b');
  EXPECT_EQ((a * b * b.inverse() * a.inverse()).length(), 0u);
  EXPECT_EQ((a * b).inverse().to_string(), "b^-1 a^-1");
  EXPECT_EQ(a.pow(3).to_string(), "a^3");
  EXPECT_EQ(a.pow(-2).to_string(), "a^-2");
  EXPECT_EQ(a.conjugated_by(b).to_string(), "b^-1 a b");
  EXPECT_EQ(Word{}.to_string(), "1");
}

TEST(Word, EvaluationIsMultiplicative) {
  GroupParams P(5, 5, 5);
  auto x = gen_x(P), y = gen_y(P);
  auto lookup = [&](char g) -> const WreathElement& { return g == 'a' ? x : y; };
  auto a = Word::letter('a'), b = Word::letter('b');
  auto w1 = a * b.pow(2) * a.inverse(), w2 = b * a.pow(3);
  auto id = WreathElement::identity(P);
  EXPECT_EQ((w1 * w2).evaluate(id, lookup), w1.evaluate(id, lookup) * w2.evaluate(id, lookup));
  EXPECT_EQ(w1.inverse().evaluate(id, lookup), w1.evaluate(id, lookup).inverse());
  EXPECT_EQ(a.conjugated_by(b).evaluate(id, lookup), conj(x, y));
}

TEST(Reconstruct, RecoversXFromTheSecondPair) {
  for (auto [p, q, r] : {std::tuple{5, 5, 5}, {5, 5, 25}, {5, 25, 5}, {3, 3, 9}, {3, 9, 9}, {7, 7, 7}, {3, 3, 27}}) {
    GroupParams P(p, q, r);
    auto rec = reconstruct_x(P);
    EXPECT_TRUE(rec.equals_x) << P.to_string();
    EXPECT_EQ(rec.value, gen_x(P)) << P.to_string();
    EXPECT_TRUE(rec.first_difference_ok) << P.to_string();
    EXPECT_TRUE(rec.recovers_y) << P.to_string();
    EXPECT_GT(rec.word.length(), 0u);
    for (const auto& l : rec.word.letters()) EXPECT_TRUE(l.gen == 'a' || l.gen == 'b');
  }
}

TEST(Reconstruct, FirstDifferenceVerbatim) {
  for (const auto& P : {GroupParams(5, 5, 5), GroupParams(5, 5, 25), GroupParams(7, 7, 49)}) {
    auto ws = build_witness(P);
    auto x = gen_x(P), y = gen_y(P);
    auto a = ws.y2, b = ws.x2;
    EXPECT_EQ(a * conj(a.inverse(), b), conj(x, y.inverse()) * conj(x, y.pow(2)).inverse()) << P.to_string();
    EXPECT_EQ(x.inverse() * b * x.inverse(), y);
  }
}

TEST(Reconstruct, TelescopingStep) {
  // x x^-(y^3) times its conjugate by y^3 gives x x^-(y^6); the variant
  // form with an inverse on the second factor does not.
  GroupParams P(5, 5, 25);
  auto x = gen_x(P), y = gen_y(P);
  auto d3 = x * conj(x, y.pow(3)).inverse();
  auto d6 = x * conj(x, y.pow(6)).inverse();
  EXPECT_EQ(d3 * conj(d3, y.pow(3)), d6);
  EXPECT_NE(d3 * conj(d3, y.pow(3)).inverse(), d6);
}

TEST(Reconstruct, StepMustBeCoprime) {
  EXPECT_THROW(reconstruct_x(GroupParams(3, 3, 9), WordVariant::Short), StepNotCoprime);
  EXPECT_THROW(reconstruct_x(GroupParams(5, 5, 25), WordVariant::Long), StepNotCoprime);
}
