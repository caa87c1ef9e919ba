#include <gtest/gtest.h>

#include "beauville/census.hpp"

using namespace beauville;
using boost::multiprecision::cpp_int;

TEST(Census, SevenThirtyOne) {
  EXPECT_EQ(quotient_order_exponent(3, 28, 3), 731);
  EXPECT_EQ(quotient_order_exponent(3, 3, 5), 731);
  auto c = order_census(3, 28);
  ASSERT_TRUE(c.collisions.contains(cpp_int(731)));
  std::set<std::pair<unsigned, unsigned>> pairs;
  for (auto i : c.collisions.at(cpp_int(731))) pairs.insert({c.entries[i].q_exponent, c.entries[i].r_exponent});
  EXPECT_TRUE(pairs.contains({28, 3}));
  EXPECT_TRUE(pairs.contains({3, 5}));
  EXPECT_EQ(pairs.size(), 2u);
}

TEST(Census, SmallCases) {
  EXPECT_EQ(quotient_order_exponent(3, 1, 1), 3);
  EXPECT_EQ(quotient_order_exponent(5, 1, 1), 5);
  auto c = order_census(5, 4);
  EXPECT_EQ(c.entries.size(), 16u);
}

TEST(Census, MatchesQuotientOrderWhereItFits) {
  for (auto [p, q, r] : {std::tuple{3, 3, 3}, {3, 9, 3}, {5, 5, 5}, {3, 3, 9}, {7, 49, 7}}) {
    GroupParams P(p, q, r);
    EXPECT_EQ(quotient_order_exponent(p, P.q_exponent(), P.r_exponent()), P.quotient_order_exponent());
    cpp_int order = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(P.quotient_order_exponent()));
    EXPECT_EQ(order, cpp_int(*P.quotient_order()));
  }
}

TEST(Census, LargeExponentsStayExact) {
  auto e = quotient_order_exponent(3, 28, 28);
  EXPECT_EQ(e, cpp_int(28) * (boost::multiprecision::pow(cpp_int(3), 28) - 1) + 28);
  EXPECT_THROW(order_census(4, 3), InvalidParams);
}
