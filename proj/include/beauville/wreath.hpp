#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beauville/params.hpp"
#include "beauville/permutation.hpp"
#include "beauville/stab_chain.hpp"

namespace beauville {

class NotInImage : public std::invalid_argument {
 public:
  explicit NotInImage(const std::string& why)
      : std::invalid_argument("permutation is not in the image of the wreath product: " + why) {}
};

// Element (v; s) of C_q wr C_r. base[j] holds the entry at position j + 1.
//
// Multiplication: (v; s)(w; t) = (u; s + t) with u_j = v_j + w_{j+s}. This is
// the unique twist making to_permutation a homomorphism when permutations act
// on the right: the point (block k, position j) goes to (k + v_j, j + s).
class WreathElement {
 public:
  using entry_type = std::uint32_t;

  WreathElement(const GroupParams& params, std::vector<entry_type> base, std::uint64_t shift)
      : params_(params), base_(std::move(base)), shift_(shift % params.r()) {
    if (base_.size() != params_.r()) throw std::invalid_argument("base length must equal r");
    for (auto& e : base_) e = static_cast<entry_type>(e % params_.q());
  }

  static WreathElement identity(const GroupParams& params) {
    return WreathElement(params, std::vector<entry_type>(params.r(), 0), 0);
  }

  // Unit entry at 1-based position `position`.
  static WreathElement unit(const GroupParams& params, std::uint64_t position, long long value = 1) {
    std::vector<entry_type> base(params.r(), 0);
    base[(position - 1) % params.r()] = static_cast<entry_type>(detail::mod(value, params.q()));
    return WreathElement(params, std::move(base), 0);
  }

  static WreathElement diagonal(const GroupParams& params, std::uint64_t c) {
    return WreathElement(params, std::vector<entry_type>(params.r(), static_cast<entry_type>(c % params.q())), 0);
  }

  const GroupParams& params() const noexcept { return params_; }
  const std::vector<entry_type>& base() const noexcept { return base_; }
  std::uint64_t shift() const noexcept { return shift_; }

  // Entry at 1-based position.
  entry_type at(std::uint64_t position) const { return base_.at((position - 1) % params_.r()); }

  bool is_identity() const noexcept {
    return shift_ == 0 && std::all_of(base_.begin(), base_.end(), [](auto e) { return e == 0; });
  }

  std::uint64_t base_sum() const noexcept {
    std::uint64_t s = 0;
    for (auto e : base_) s += e;
    return s % params_.q();
  }

  friend WreathElement operator*(const WreathElement& a, const WreathElement& b) {
    if (!(a.params_ == b.params_)) throw ParamsMismatch();
    const auto r = a.params_.r();
    const auto q = a.params_.q();
    std::vector<entry_type> u(r);
    for (std::uint64_t j = 0; j < r; ++j) {
      u[j] = static_cast<entry_type>((a.base_[j] + b.base_[(j + a.shift_) % r]) % q);
    }
    return WreathElement(a.params_, std::move(u), a.shift_ + b.shift_);
  }

  WreathElement inverse() const {
    const auto r = params_.r();
    const auto q = params_.q();
    std::vector<entry_type> u(r);
    const auto back = r - shift_;
    for (std::uint64_t j = 0; j < r; ++j) {
      auto v = base_[(j + back) % r];
      u[j] = static_cast<entry_type>((q - v) % q);
    }
    return WreathElement(params_, std::move(u), back % r);
  }

  WreathElement pow(long long k) const {
    WreathElement b = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    WreathElement acc = identity(params_);
    while (e > 0) {
      if (e & 1ULL) acc = acc * b;
      b = b * b;
      e >>= 1ULL;
    }
    return acc;
  }

  // Iterated powering; orders divide q*r.
  std::uint64_t order() const {
    std::uint64_t k = 1;
    WreathElement acc = *this;
    while (!acc.is_identity()) {
      acc = acc * *this;
      ++k;
    }
    return k;
  }

  // Dense key in [0, q^r * r): mixed radix over the base digits, then the shift.
  std::uint64_t key() const noexcept {
    std::uint64_t k = 0;
    for (auto e : base_) k = k * params_.q() + e;
    return k * params_.r() + shift_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < base_.size(); ++j) os << (j ? "," : "") << base_[j];
    os << "; " << shift_ << ')';
    return os.str();
  }

  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.params_ == b.params_ && a.shift_ == b.shift_ && a.base_ == b.base_;
  }

  friend std::ostream& operator<<(std::ostream& os, const WreathElement& e) { return os << e.to_string(); }

 private:
  GroupParams params_;
  std::vector<entry_type> base_;
  std::uint64_t shift_;
};

inline WreathElement multiply(const WreathElement& a, const WreathElement& b) { return a * b; }
inline WreathElement invert(const WreathElement& a) { return a.inverse(); }
inline WreathElement power(const WreathElement& a, long long k) { return a.pow(k); }
inline std::uint64_t element_order(const WreathElement& a) { return a.order(); }

// a^g = g^-1 a g.
inline WreathElement conj(const WreathElement& a, const WreathElement& g) { return g.inverse() * a * g; }

inline WreathElement commutator(const WreathElement& a, const WreathElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

// x: unit base entry at the midpoint (r+1)/2. y: the top generator.
inline WreathElement gen_x(const GroupParams& params) { return WreathElement::unit(params, params.midpoint()); }
inline WreathElement gen_y(const GroupParams& params) {
  return WreathElement(params, std::vector<WreathElement::entry_type>(params.r(), 0), 1);
}

inline bool is_central(const WreathElement& e) {
  const auto& b = e.base();
  return e.shift() == 0 && std::all_of(b.begin(), b.end(), [&](auto v) { return v == b.front(); });
}

inline std::vector<WreathElement> center_elements(const GroupParams& params) {
  std::vector<WreathElement> z;
  z.reserve(params.q());
  for (std::uint64_t c = 0; c < params.q(); ++c) z.push_back(WreathElement::diagonal(params, c));
  return z;
}

// --- Permutation representation on {1..qr} ---------------------------------

// Point k*r + j (1-based, block k in 0..q-1, position j in 1..r).
inline Permutation to_permutation(const WreathElement& e) {
  const auto& P = e.params();
  const auto q = P.q();
  const auto r = P.r();
  std::vector<Permutation::point_type> images(q * r);
  for (std::uint64_t k = 0; k < q; ++k) {
    for (std::uint64_t j = 0; j < r; ++j) {
      auto k2 = (k + e.base()[j]) % q;
      auto j2 = (j + e.shift()) % r;
      images[k * r + j] = static_cast<Permutation::point_type>(k2 * r + j2 + 1);
    }
  }
  return Permutation::from_images(images);
}

inline WreathElement from_permutation(const Permutation& g, const GroupParams& params) {
  const auto q = params.q();
  const auto r = params.r();
  if (g.degree() != q * r) throw NotInImage("degree is not q*r");
  std::vector<WreathElement::entry_type> base(r);
  std::uint64_t shift = 0;
  for (std::uint64_t j = 0; j < r; ++j) {
    auto img = g.image0(j);
    auto k0 = img / r;
    auto s = (img % r + r - j) % r;
    if (j == 0) {
      shift = s;
    } else if (s != shift) {
      throw NotInImage("positions are not moved by a common shift");
    }
    base[j] = static_cast<WreathElement::entry_type>(k0);
  }
  for (std::uint64_t k = 0; k < q; ++k) {
    for (std::uint64_t j = 0; j < r; ++j) {
      auto expected = ((k + base[j]) % q) * r + (j + shift) % r;
      if (g.image0(k * r + j) != expected) throw NotInImage("blocks are not permuted uniformly");
    }
  }
  return WreathElement(params, std::move(base), shift);
}

// Xi: the q-cycle through the midpoints (r+1)/2 + k*r.
inline Permutation xi_permutation(const GroupParams& params) {
  std::vector<Permutation::point_type> cycle;
  for (std::uint64_t k = 0; k < params.q(); ++k) {
    cycle.push_back(static_cast<Permutation::point_type>(params.midpoint() + k * params.r()));
  }
  return Permutation::from_cycles(params.degree(), {cycle});
}

// Upsilon: (1..r)(r+1..2r)...(qr-r+1..qr).
inline Permutation upsilon_permutation(const GroupParams& params) {
  std::vector<std::vector<Permutation::point_type>> cycles;
  for (std::uint64_t k = 0; k < params.q(); ++k) {
    std::vector<Permutation::point_type> c;
    for (std::uint64_t j = 1; j <= params.r(); ++j) c.push_back(static_cast<Permutation::point_type>(k * params.r() + j));
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(params.degree(), cycles);
}

// t = (1,qr)(2,qr-1)...((qr+1)/2 - 1, (qr+1)/2 + 1); qr is odd so the middle point is fixed.
inline Permutation involution_t(const GroupParams& params) {
  const auto n = params.degree();
  std::vector<std::vector<Permutation::point_type>> cycles;
  for (std::uint64_t i = 1; i < (n + 1) / 2; ++i) {
    cycles.push_back({static_cast<Permutation::point_type>(i), static_cast<Permutation::point_type>(n + 1 - i)});
  }
  return Permutation::from_cycles(n, cycles);
}

// Conjugation by t, read off in closed form: (v; s) -> (u; -s), u_j = -v_{r+1-j}.
inline WreathElement apply_t(const WreathElement& e) {
  const auto& P = e.params();
  const auto q = P.q();
  const auto r = P.r();
  std::vector<WreathElement::entry_type> u(r);
  for (std::uint64_t j = 0; j < r; ++j) {
    u[j] = static_cast<WreathElement::entry_type>((q - e.base()[r - 1 - j]) % q);
  }
  return WreathElement(P, std::move(u), (r - e.shift()) % r);
}

// The same map computed literally through the permutation representation.
inline WreathElement apply_t_via_permutation(const WreathElement& e) {
  auto image = conjugate(to_permutation(e), involution_t(e.params()));
  try {
    return from_permutation(image, e.params());
  } catch (const NotInImage&) {
    throw std::logic_error("t failed to normalize the wreath product");
  }
}

// --- Conjugacy invariant -----------------------------------------------------

// Top shift plus the base sums over each <shift>-orbit of positions, taken up
// to rotation (conjugating by y rotates the orbits). g = gcd(shift, r), with
// g = r for shift 0.
struct ConjInvariant {
  std::uint64_t shift = 0;
  std::vector<std::uint32_t> orbit_sums;

  friend bool operator==(const ConjInvariant&, const ConjInvariant&) = default;
  friend auto operator<=>(const ConjInvariant&, const ConjInvariant&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "s=" << shift << " [";
    for (std::size_t i = 0; i < orbit_sums.size(); ++i) os << (i ? "," : "") << orbit_sums[i];
    os << ']';
    return os.str();
  }
};

namespace detail {

inline std::vector<std::uint32_t> min_rotation(const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> best = v;
  std::vector<std::uint32_t> cur(v.size());
  for (std::size_t k = 1; k < v.size(); ++k) {
    for (std::size_t i = 0; i < v.size(); ++i) cur[i] = v[(i + k) % v.size()];
    if (cur < best) best = cur;
  }
  return best;
}

// Orbit sums of base + c*(1,...,1).
inline std::vector<std::uint32_t> orbit_sums(const WreathElement& e, std::uint64_t diagonal_shift) {
  const auto r = e.params().r();
  const auto q = e.params().q();
  const auto g = e.shift() == 0 ? r : std::gcd(e.shift(), r);
  std::vector<std::uint64_t> sums(g, 0);
  for (std::uint64_t j = 0; j < r; ++j) sums[j % g] += e.base()[j] + diagonal_shift;
  std::vector<std::uint32_t> out(g);
  for (std::uint64_t i = 0; i < g; ++i) out[i] = static_cast<std::uint32_t>(sums[i] % q);
  return out;
}

}  // namespace detail

inline ConjInvariant conj_invariant(const WreathElement& e) {
  return {e.shift(), detail::min_rotation(detail::orbit_sums(e, 0))};
}

inline bool are_conjugate(const WreathElement& a, const WreathElement& b) {
  if (!(a.params() == b.params())) throw ParamsMismatch();
  return conj_invariant(a) == conj_invariant(b);
}

// Central classes are exactly the diagonal elements.
inline bool is_central_invariant(const ConjInvariant& inv) {
  return inv.shift == 0 &&
         std::all_of(inv.orbit_sums.begin(), inv.orbit_sums.end(), [&](auto v) { return v == inv.orbit_sums.front(); });
}

// --- Frattini quotient and generation ----------------------------------------

struct FrattiniImage {
  std::uint64_t base_sum;  // mod p
  std::uint64_t shift;     // mod p
  friend bool operator==(const FrattiniImage&, const FrattiniImage&) = default;
};

inline FrattiniImage frattini_image(const WreathElement& e) {
  const auto p = e.params().p();
  return {e.base_sum() % p, e.shift() % p};
}

// Burnside basis theorem: a pair generates the p-group iff its images span
// the rank-2 Frattini quotient, i.e. the 2x2 determinant is a unit mod p.
inline bool generates(const WreathElement& a, const WreathElement& b) {
  if (!(a.params() == b.params())) throw ParamsMismatch();
  const auto p = a.params().p();
  auto fa = frattini_image(a);
  auto fb = frattini_image(b);
  auto det = (fa.base_sum * fb.shift + p * p - (fa.shift * fb.base_sum) % p) % p;
  return det != 0;
}

// --- Presentation ------------------------------------------------------------

struct RelationReport {
  bool x_order_q = false;
  bool y_order_r = false;
  bool commutators_trivial = false;
  BigInt group_order;
  BigInt expected_order;
  bool passed() const { return x_order_q && y_order_r && commutators_trivial && group_order == expected_order; }
};

// Checks x^q, y^r and [x, x^(y^i)] for i = 1..(r-1)/2 on Xi and Upsilon, and
// that <Xi, Upsilon> has order q^r * r.
inline RelationReport verify_relations(const GroupParams& params) {
  RelationReport rep;
  auto xi = xi_permutation(params);
  auto up = upsilon_permutation(params);
  rep.x_order_q = xi.pow(static_cast<long long>(params.q())).is_identity();
  rep.y_order_r = up.pow(static_cast<long long>(params.r())).is_identity();
  rep.commutators_trivial = true;
  for (std::uint64_t i = 1; i <= (params.r() - 1) / 2; ++i) {
    auto shifted = conjugate(xi, up.pow(static_cast<long long>(i)));
    if (!commutator(xi, shifted).is_identity()) rep.commutators_trivial = false;
  }
  rep.group_order = group_order({xi, up});
  rep.expected_order = boost::multiprecision::pow(BigInt(params.q()), static_cast<unsigned>(params.r())) * params.r();
  return rep;
}

}  // namespace beauville
