#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "beauville/permutation.hpp"

namespace beauville {

using BigInt = boost::multiprecision::cpp_int;

// Base and strong generating set built by the deterministic Schreier-Sims
// procedure. Transversals are stored explicitly: transversal[beta] maps the
// level's base point to beta.
class StabChain {
 public:
  struct Level {
    std::uint32_t base_point = 0;  // 0-based
    std::vector<Permutation> generators;
    std::vector<std::uint32_t> orbit;
    std::vector<std::optional<Permutation>> transversal;
  };

  StabChain(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
    for (const auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch(degree, g.degree());
    }
    build(generators);
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> b;
    for (const auto& l : levels_) b.push_back(l.base_point + 1);
    return b;
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& l : levels_) n *= l.orbit.size();
    return n;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch(degree_, g.degree());
    auto [residue, level] = sift(g, 0);
    return level == levels_.size() && residue.is_identity();
  }

 private:
  // Strips g through levels [from, end). Returns the residue and the level at
  // which sifting stopped (levels_.size() when it went all the way through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto& l = levels_[i];
      auto beta = g.image0(l.base_point);
      if (!l.transversal[beta]) return {std::move(g), i};
      g = g * l.transversal[beta]->inverse();
    }
    return {std::move(g), levels_.size()};
  }

  static std::uint32_t first_moved_point(const Permutation& g) {
    for (std::size_t i = 0; i < g.degree(); ++i) {
      if (g.image0(i) != i) return static_cast<std::uint32_t>(i);
    }
    return 0;
  }

  void recompute_orbit(Level& l) const {
    l.orbit.assign(1, l.base_point);
    l.transversal.assign(degree_, std::nullopt);
    l.transversal[l.base_point] = Permutation::identity(degree_);
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      auto delta = l.orbit[k];
      for (const auto& s : l.generators) {
        auto img = s.image0(delta);
        if (!l.transversal[img]) {
          l.transversal[img] = *l.transversal[delta] * s;
          l.orbit.push_back(img);
        }
      }
    }
  }

  bool fixes_base_prefix(const Permutation& g, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i) {
      if (g.image0(levels_[i].base_point) != levels_[i].base_point) return false;
    }
    return true;
  }

  void build(const std::vector<Permutation>& generators) {
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
      if (!g.is_identity()) gens.push_back(g);
    }
    for (const auto& g : gens) {
      if (fixes_base_prefix(g, levels_.size())) {
        Level l;
        l.base_point = first_moved_point(g);
        levels_.push_back(std::move(l));
      }
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& g : gens) {
        if (fixes_base_prefix(g, i)) levels_[i].generators.push_back(g);
      }
      recompute_orbit(levels_[i]);
    }

    // Walk levels bottom-up; whenever a Schreier generator fails to sift,
    // add its residue to the levels below and resume from the deepest one.
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool clean = true;
      auto& level = levels_[static_cast<std::size_t>(i)];
      for (std::size_t oi = 0; clean && oi < level.orbit.size(); ++oi) {
        auto beta = level.orbit[oi];
        for (std::size_t si = 0; clean && si < level.generators.size(); ++si) {
          const auto& s = level.generators[si];
          auto image = s.image0(beta);
          Permutation h = *level.transversal[beta] * s * level.transversal[image]->inverse();
          if (h.is_identity()) continue;
          auto [residue, stop] = sift(std::move(h), static_cast<std::size_t>(i) + 1);
          if (stop == levels_.size() && residue.is_identity()) continue;
          clean = false;
          if (stop == levels_.size()) {
            Level fresh;
            fresh.base_point = first_moved_point(residue);
            levels_.push_back(std::move(fresh));
          }
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
            levels_[l].generators.push_back(residue);
            recompute_orbit(levels_[l]);
          }
          i = static_cast<std::ptrdiff_t>(stop);
        }
      }
      if (clean) --i;
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

inline BigInt group_order(std::size_t degree, const std::vector<Permutation>& gens) {
  return StabChain(degree, gens).order();
}

inline BigInt group_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  return group_order(gens.front().degree(), gens);
}

inline bool contains(const StabChain& chain, const Permutation& g) { return chain.contains(g); }

}  // namespace beauville
