#pragma once

// Independent oracles shared by the unit tests. Nothing here uses the
// stabilizer chain or the conjugacy invariants it is used to check.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "beauville/permutation.hpp"
#include "beauville/wreath.hpp"

namespace beauville::oracle {

// Order of <gens> by breadth-first closure over explicit permutations.
inline std::size_t closure_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : gens) {
      auto next = queue[k] * g;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen.size();
}

inline WreathElement random_element(const GroupParams& params, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> base(0, params.q() - 1);
  std::uniform_int_distribution<std::uint64_t> shift(0, params.r() - 1);
  std::vector<WreathElement::entry_type> v(params.r());
  for (auto& e : v) e = static_cast<WreathElement::entry_type>(base(rng));
  return WreathElement(params, std::move(v), shift(rng));
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Permutation::point_type> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Permutation::point_type>(i + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

// Every element of C_q wr C_r, by decoding the dense key.
inline std::vector<WreathElement> all_elements(const GroupParams& params) {
  std::vector<WreathElement> out;
  const auto total = *params.group_order();
  for (std::uint64_t k = 0; k < total; ++k) {
    auto rest = k;
    auto shift = rest % params.r();
    rest /= params.r();
    std::vector<WreathElement::entry_type> base(params.r());
    for (std::size_t j = params.r(); j-- > 0;) {
      base[j] = static_cast<WreathElement::entry_type>(rest % params.q());
      rest /= params.q();
    }
    out.emplace_back(params, std::move(base), shift);
  }
  return out;
}

}  // namespace beauville::oracle
