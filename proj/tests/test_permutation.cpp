#include <gtest/gtest.h>

#include <random>

#include "beauville/wreath.hpp"
#include "test_support.hpp"

using namespace beauville;

namespace {

const GroupParams P33(3, 3, 3);
const GroupParams P55(5, 5, 5);

}  // namespace

TEST(Permutation, ComposeIdentityOnLeft) {
  auto up = upsilon_permutation(P33);
  EXPECT_EQ(compose(Permutation::identity(9), up), up);
}

TEST(Permutation, ComposeCycleSquares) {
  auto c = Permutation::cycle(3, {1, 2, 3});
  EXPECT_EQ(compose(c, c), Permutation::cycle(3, {1, 3, 2}));
}

TEST(Permutation, ComposeXiThenUpsilon) {
  auto g = compose(xi_permutation(P33), upsilon_permutation(P33));
  EXPECT_EQ(g(2), 6u);
  EXPECT_EQ(g(5), 9u);
  EXPECT_EQ(g(8), 3u);
  EXPECT_EQ(g(1), 2u);
  EXPECT_EQ(g(4), 5u);
}

TEST(Permutation, GeneratorsOnNinePoints) {
  EXPECT_EQ(xi_permutation(P33), Permutation::cycle(9, {2, 5, 8}));
  EXPECT_EQ(upsilon_permutation(P33), Permutation::from_cycles(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}));
  EXPECT_EQ(involution_t(P33), Permutation::from_cycles(9, {{1, 9}, {2, 8}, {3, 7}, {4, 6}}));
}

TEST(Permutation, ConjugateByInvolution) {
  auto t = involution_t(P33);
  auto a = Permutation::cycle(9, {2, 5, 8});
  EXPECT_EQ(conjugate(a, Permutation::identity(9)), a);
  EXPECT_EQ(conjugate(xi_permutation(P33), t), Permutation::cycle(9, {8, 5, 2}));
  EXPECT_EQ(conjugate(xi_permutation(P33), t), xi_permutation(P33).inverse());
  EXPECT_EQ(conjugate(upsilon_permutation(P33), t), upsilon_permutation(P33).inverse());
}

TEST(Permutation, Orders) {
  EXPECT_EQ(order(Permutation::identity(9)), 1u);
  EXPECT_EQ(order(upsilon_permutation(P33)), 3u);
  EXPECT_EQ(order(xi_permutation(P33)), 3u);
  EXPECT_EQ(order(involution_t(P55)), 2u);
  EXPECT_EQ(order(Permutation::from_cycles(7, {{1, 2}, {3, 4, 5}})), 6u);
}

TEST(Permutation, FixedPoints) {
  EXPECT_EQ(fixed_point_count(xi_permutation(P55)), 20u);
  EXPECT_EQ(fixed_point_count(Permutation::identity(11)), 11u);
  EXPECT_EQ(fixed_point_count(upsilon_permutation(P55)), 0u);
}

TEST(Permutation, DegreeMismatchThrows) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), DegreeMismatch);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_ANY_THROW(Permutation::from_images({1, 1, 2}));
}

TEST(Permutation, GroupAxiomsOnRandomSamples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = oracle::random_permutation(12, rng);
    auto b = oracle::random_permutation(12, rng);
    auto c = oracle::random_permutation(12, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    // right action: apply a first
    for (Permutation::point_type j = 1; j <= 12; ++j) EXPECT_EQ((a * b)(j), b(a(j)));
  }
}

TEST(Permutation, ConjugationPreservesCycleTypeAndOrder) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = oracle::random_permutation(10, rng);
    auto g = oracle::random_permutation(10, rng);
    auto c = conjugate(a, g);
    EXPECT_EQ(c.cycle_type(), a.cycle_type());
    EXPECT_EQ(order(c), order(a));
    EXPECT_EQ(c, g.inverse() * a * g);
  }
}

TEST(Permutation, PowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = oracle::random_permutation(9, rng);
    auto acc = Permutation::identity(9);
    for (long long k = 0; k < 15; ++k) {
      EXPECT_EQ(a.pow(k), acc);
      EXPECT_EQ(a.pow(-k), acc.inverse());
      acc = acc * a;
    }
    EXPECT_TRUE(a.pow(static_cast<long long>(order(a))).is_identity());
  }
}
