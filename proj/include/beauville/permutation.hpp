#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace beauville {

class DegreeMismatch : public std::invalid_argument {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("permutation degree mismatch: " + std::to_string(a) +
                              " vs " + std::to_string(b)) {}
};

// A bijection of {1..n}. Storage is 0-based; the public point API is 1-based so
// cycles read the way they are usually written. Permutations act on
// the right: compose(a, b) applies a first, then b.
class Permutation {
 public:
  using point_type = std::uint32_t;

  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point_type{0});
    return p;
  }

  // images[j-1] is the image of point j (both 1-based).
  static Permutation from_images(const std::vector<point_type>& one_based) {
    Permutation p;
    p.images_.reserve(one_based.size());
    std::vector<bool> seen(one_based.size(), false);
    for (auto img : one_based) {
      if (img < 1 || img > one_based.size() || seen[img - 1]) {
        throw std::invalid_argument("images do not form a bijection");
      }
      seen[img - 1] = true;
      p.images_.push_back(img - 1);
    }
    return p;
  }

  // Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<point_type>>& cycles) {
    Permutation result = identity(degree);
    for (const auto& cycle : cycles) {
      Permutation c = identity(degree);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        point_type from = cycle[i];
        point_type to = cycle[(i + 1) % cycle.size()];
        if (from < 1 || from > degree || to < 1 || to > degree) {
          throw std::invalid_argument("cycle point out of range");
        }
        c.images_[from - 1] = to - 1;
      }
      if (!c.is_bijection()) throw std::invalid_argument("cycle repeats a point");
      result = result * c;
    }
    return result;
  }

  static Permutation cycle(std::size_t degree, std::initializer_list<point_type> points) {
    return from_cycles(degree, {std::vector<point_type>(points)});
  }

  std::size_t degree() const noexcept { return images_.size(); }

  // 1-based image.
  point_type operator()(point_type point) const { return images_.at(point - 1) + 1; }

  // 0-based image, unchecked; used by the inner loops of the chain algorithms.
  point_type image0(std::size_t point) const noexcept { return images_[point]; }

  const std::vector<point_type>& images0() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
    Permutation r;
    r.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.images_[images_[i]] = static_cast<point_type>(i);
    return r;
  }

  Permutation pow(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Permutation acc = identity(degree());
    while (e > 0) {
      if (e & 1ULL) acc = acc * base;
      base = base * base;
      e >>= 1ULL;
    }
    return acc;
  }

  // Least k >= 1 with a^k = identity: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  std::size_t fixed_point_count() const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i ? 1 : 0;
    return n;
  }

  // Sorted cycle lengths, including fixed points as 1-cycles.
  std::vector<std::size_t> cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  // Cycle notation with 1-based points, fixed points omitted; "()" for identity.
  std::string to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      any = true;
      os << '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i) os << ',';
        os << j + 1;
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.to_string();
  }

 private:
  bool is_bijection() const {
    std::vector<bool> seen(images_.size(), false);
    for (auto img : images_) {
      if (img >= images_.size() || seen[img]) return false;
      seen[img] = true;
    }
    return true;
  }

  std::vector<point_type> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

inline Permutation inverse(const Permutation& a) { return a.inverse(); }

// a^by = by^-1 * a * by.
inline Permutation conjugate(const Permutation& a, const Permutation& by) {
  if (a.degree() != by.degree()) throw DegreeMismatch(a.degree(), by.degree());
  return by.inverse() * a * by;
}

inline std::uint64_t order(const Permutation& a) { return a.order(); }

inline std::size_t fixed_point_count(const Permutation& a) { return a.fixed_point_count(); }

// [a, b] = a^-1 b^-1 a b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace beauville
