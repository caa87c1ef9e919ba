#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "beauville/cyclotomic.hpp"

using namespace beauville;

namespace {

std::complex<double> root(std::uint64_t n, long long i) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
}

CycInt random_cyc(std::uint64_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<long long> exp(0, static_cast<long long>(n) - 1);
  CycInt acc(n, coeff(rng));
  for (int k = 0; k < 5; ++k) {
    auto c = coeff(rng);
    acc = acc + CycInt(n, c) * root_power(n, exp(rng));
  }
  return acc;
}

}  // namespace

TEST(Cyclotomic, TowerIdentities) {
  EXPECT_EQ(root_power(9, 3), root_power(3, 1));
  EXPECT_EQ(root_power(25, 10), root_power(5, 2));
  EXPECT_EQ(root_power(5, 0), CycInt(5, 1));
  EXPECT_EQ(root_power(7, -1), root_power(7, 6));
  EXPECT_EQ(root_power(5, 2) * root_power(5, 4), root_power(5, 1));
  EXPECT_EQ(cyc_mul(root_power(27, 5), root_power(9, 2)), root_power(27, 11));
}

TEST(Cyclotomic, RootsSumToZero) {
  for (std::uint64_t n : {3, 5, 7, 9, 25, 27, 49}) {
    CycInt s(n);
    for (std::uint64_t j = 0; j < n; ++j) s = cyc_add(s, root_power(n, static_cast<long long>(j)));
    EXPECT_TRUE(s.is_zero()) << n;
    EXPECT_TRUE(cyc_eq(s, CycInt(n)));
  }
  // the primitive ones of 9 sum to 0 as well, and 1 + z3 + z3^2 = 0
  EXPECT_TRUE((CycInt(3, 1) + root_power(3, 1) + root_power(3, 2)).is_zero());
}

TEST(Cyclotomic, CanonicalFormIsUnique) {
  // 1 + z5 + z5^2 + z5^3 = -z5^4
  auto lhs = CycInt(5, 1) + root_power(5, 1) + root_power(5, 2) + root_power(5, 3);
  EXPECT_EQ(lhs, CycInt(5, 0) - root_power(5, 4));
  EXPECT_EQ(lhs.to_string(), (CycInt(5) - root_power(5, 4)).to_string());
  EXPECT_FALSE(root_power(5, 1) == root_power(5, 2));
  EXPECT_FALSE(CycInt(25, 21) + root_power(5, 1) == CycInt(25, 21) + root_power(25, 1));
}

TEST(Cyclotomic, FloatingPointAgreement) {
  std::mt19937_64 rng(61);
  for (std::uint64_t n : {5, 9, 25, 27}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_cyc(n, rng), b = random_cyc(n, rng);
      auto sum = (a + b).evaluate(), prod = (a * b).evaluate();
      EXPECT_LT(std::abs(sum - (a.evaluate() + b.evaluate())), 1e-9);
      EXPECT_LT(std::abs(prod - a.evaluate() * b.evaluate()), 1e-9);
    }
    for (long long i = -30; i < 30; ++i) EXPECT_LT(std::abs(root_power(n, i).evaluate() - root(n, i)), 1e-9);
  }
}

TEST(Cyclotomic, RingAxiomsUnderReassociation) {
  std::mt19937_64 rng(62);
  for (std::uint64_t n : {5, 9, 49}) {
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_cyc(n, rng), b = random_cyc(n, rng), c = random_cyc(n, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - a), CycInt(n));
      EXPECT_EQ((a * b).to_string(), (b * a).to_string());
    }
  }
}

TEST(Cyclotomic, MixedModuli) {
  auto s = root_power(5, 1) + root_power(25, 5);
  EXPECT_EQ(s.modulus(), 25u);
  EXPECT_EQ(s, CycInt(25, 0) + root_power(5, 1) + root_power(5, 1));
  EXPECT_THROW(root_power(5, 1) + root_power(3, 1), ModulusMismatch);
  EXPECT_THROW(root_power(25, 1).embed(5), ModulusMismatch);
}

TEST(Cyclotomic, ToString) {
  EXPECT_EQ((CycInt(5, 21) + root_power(5, 1)).to_string(), "21 + z5");
  EXPECT_EQ((root_power(5, 2) - CycInt(5, 3)).to_string(), "-3 + z5^2");
  EXPECT_EQ(CycInt(7).to_string(), "0");
}
