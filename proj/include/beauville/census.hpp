#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "beauville/params.hpp"

namespace beauville {

// |G/Z| = q^(r-1) r = p^(b(r-1) + a) for q = p^b, r = p^a. Only exponents are
// formed; r itself can be large, so they are kept exact.
struct CensusEntry {
  unsigned q_exponent;  // b
  unsigned r_exponent;  // a
  boost::multiprecision::cpp_int order_exponent;
};

struct Census {
  std::uint64_t p = 0;
  unsigned max_exponent = 0;
  std::vector<CensusEntry> entries;
  // Order exponents attained by two or more (q, r), with the indices of those entries.
  std::map<boost::multiprecision::cpp_int, std::vector<std::size_t>> collisions;
};

inline boost::multiprecision::cpp_int quotient_order_exponent(std::uint64_t p, unsigned b, unsigned a) {
  using boost::multiprecision::cpp_int;
  cpp_int r = boost::multiprecision::pow(cpp_int(p), a);
  return cpp_int(b) * (r - 1) + a;
}

inline Census order_census(std::uint64_t p, unsigned max_exponent) {
  if (p < 3 || !detail::is_prime(p)) throw InvalidParams("census needs an odd prime p");
  Census c{p, max_exponent, {}, {}};
  std::map<boost::multiprecision::cpp_int, std::vector<std::size_t>> by_exponent;
  for (unsigned b = 1; b <= max_exponent; ++b) {
    for (unsigned a = 1; a <= max_exponent; ++a) {
      c.entries.push_back({b, a, quotient_order_exponent(p, b, a)});
      by_exponent[c.entries.back().order_exponent].push_back(c.entries.size() - 1);
    }
  }
  for (auto& [e, idx] : by_exponent) {
    if (idx.size() > 1) c.collisions.emplace(e, std::move(idx));
  }
  return c;
}

}  // namespace beauville
