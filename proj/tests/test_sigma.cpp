#include <gtest/gtest.h>

#include <random>

#include "beauville/sigma.hpp"
#include "test_support.hpp"

using namespace beauville;

namespace {

const GroupParams P33(3, 3, 3);
const GroupParams P55(5, 5, 5);

// Element indices covered by a brute-force Sigma-set.
template <class Model>
std::set<std::uint32_t> covered(const BruteContext<Model>& ctx, const SigmaSet<std::uint32_t>& s) {
  std::set<std::uint32_t> out;
  for (auto l : s.classes) out.insert(ctx.classes.members[l].begin(), ctx.classes.members[l].end());
  return out;
}

// Element indices whose label lies in an invariant-based Sigma-set.
template <class Model, class LabelFn>
std::set<std::uint32_t> covered(const SmallGroup<Model>& g, const SigmaSet<ConjInvariant>& s, LabelFn label) {
  std::set<std::uint32_t> out;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (s.contains(label(g.element(i)))) out.insert(i);
  }
  return out;
}

// Sigma by the definition: every power i = 1..|G| of a, b, ab, conjugated by every element.
template <class Model>
std::set<std::uint32_t> literal_sigma(const SmallGroup<Model>& g, const typename Model::element_type& a,
                                      const typename Model::element_type& b) {
  const auto& M = g.model();
  std::set<std::uint32_t> powers;
  for (const auto& m : {a, b, M.multiply(a, b)}) {
    auto cur = m;
    for (std::size_t i = 1; i <= g.size(); ++i, cur = M.multiply(cur, m)) powers.insert(g.index_of(cur));
  }
  std::set<std::uint32_t> out;
  for (auto idx : powers) {
    for (auto c : g.literal_class(g.element(idx))) out.insert(c);
  }
  return out;
}

}  // namespace

TEST(Sigma, ContainsIdentityClass) {
  std::mt19937_64 rng(51);
  WreathContext ctx{P55};
  for (int trial = 0; trial < 100; ++trial) {
    auto s = sigma(ctx, oracle::random_element(P55, rng), oracle::random_element(P55, rng));
    EXPECT_TRUE(s.contains(ctx.identity_label()));
  }
}

TEST(Sigma, GeneratingPairsCoverTheCenterOn33) {
  auto g = enumerate_group(P33);
  BruteContext<WreathModel> bctx(g);
  WreathContext wctx{P33};
  int generating = 0;
  for (const auto& a : g.elements()) {
    for (const auto& b : g.elements()) {
      if (!generates(a, b)) continue;
      ++generating;
      auto sb = sigma(bctx, a, b);
      auto sw = sigma(wctx, a, b);
      for (const auto& z : center_elements(P33)) {
        ASSERT_TRUE(sb.contains(bctx.label(z)));
        ASSERT_TRUE(sw.contains(conj_invariant(z)));
      }
    }
  }
  EXPECT_GT(generating, 0);
}

TEST(Sigma, MatchesLiteralDefinitionOn33) {
  auto g = enumerate_group(P33);
  BruteContext<WreathModel> bctx(g);
  WreathContext wctx{P33};
  for (std::size_t i = 0; i < g.size(); i += 3) {
    for (std::size_t j = 0; j < g.size(); j += 5) {
      const auto &a = g.element(i), &b = g.element(j);
      auto lit = literal_sigma(g, a, b);
      ASSERT_EQ(covered(bctx, sigma(bctx, a, b)), lit);
      ASSERT_EQ(covered(g, sigma(wctx, a, b), [](const auto& e) { return conj_invariant(e); }), lit);
    }
  }
}

TEST(Sigma, XYOn55MatchesLiteralDefinition) {
  auto g = enumerate_group(P55);
  BruteContext<WreathModel> bctx(g);
  auto x = gen_x(P55), y = gen_y(P55);
  auto lit = literal_sigma(g, x, y);
  EXPECT_EQ(covered(bctx, sigma(bctx, x, y)), lit);
  EXPECT_EQ(covered(g, sigma(WreathContext{P55}, x, y), [](const auto& e) { return conj_invariant(e); }), lit);
}

TEST(Sigma, InvariantAndBruteAgreeInQuotient55) {
  auto g = enumerate_quotient(P55);
  BruteContext<QuotientModel> bctx(g);
  QuotientContext qctx{P55};
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = project(oracle::random_element(P55, rng)), b = project(oracle::random_element(P55, rng));
    ASSERT_EQ(covered(bctx, sigma(bctx, a, b)),
              covered(g, sigma(qctx, a, b), [](const auto& e) { return quotient_class_label(e); }));
  }
}

TEST(Sigma, ConjugationInvariance) {
  std::mt19937_64 rng(53);
  for (const auto& P : {P55, GroupParams(3, 3, 9), GroupParams(5, 25, 5)}) {
    WreathContext ctx{P};
    QuotientContext qctx{P};
    for (int trial = 0; trial < 50; ++trial) {
      auto a = oracle::random_element(P, rng), b = oracle::random_element(P, rng);
      auto g = oracle::random_element(P, rng);
      EXPECT_EQ(sigma(ctx, conj(a, g), conj(b, g)).classes, sigma(ctx, a, b).classes);
      EXPECT_EQ(sigma(qctx, project(conj(a, g)), project(conj(b, g))).classes,
                sigma(qctx, project(a), project(b)).classes);
    }
  }
}

TEST(Sigma, OrderingRobustness) {
  std::mt19937_64 rng(54);
  WreathContext ctx{P55};
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_element(P55, rng), b = oracle::random_element(P55, rng);
    EXPECT_TRUE(are_conjugate(a * b, b * a));
    EXPECT_EQ(sigma(ctx, a, b).classes, sigma(ctx, b, a).classes);
  }
}

TEST(Sigma, DaggerAgainstItselfFails) {
  WreathContext ctx{P55};
  auto s = sigma(ctx, gen_x(P55), gen_y(P55));
  EXPECT_FALSE(check_dagger(ctx, s, s));
  EXPECT_FALSE(check_double_dagger(ctx, s, s));
}

TEST(Sigma, DoubleDaggerAllowsOnlyCentralClasses) {
  WreathContext ctx{P55};
  SigmaSet<ConjInvariant> s1, s2;
  for (const auto& z : center_elements(P55)) {
    s1.classes.insert(conj_invariant(z));
    s2.classes.insert(conj_invariant(z));
  }
  s1.classes.insert(conj_invariant(gen_x(P55)));
  s2.classes.insert(conj_invariant(gen_y(P55)));
  EXPECT_TRUE(check_double_dagger(ctx, s1, s2));
  EXPECT_FALSE(check_dagger(ctx, s1, s2));
  s2.classes.insert(conj_invariant(gen_x(P55)));
  EXPECT_FALSE(check_double_dagger(ctx, s1, s2));
  EXPECT_EQ(common_classes(s1, s2).size(), 6u);
}
