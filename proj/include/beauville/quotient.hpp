#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beauville/small_group.hpp"
#include "beauville/wreath.hpp"

namespace beauville {

inline constexpr std::uint64_t kDefaultBudget = 100000;

// Coset wZ of the central quotient G/Z. Z is the diagonal subgroup, so the
// representative with base entry 0 at position 1 is unique.
class CosetElement {
 public:
  explicit CosetElement(const WreathElement& lift) : rep_(normalize(lift)) {}

  static CosetElement identity(const GroupParams& params) { return CosetElement(WreathElement::identity(params)); }

  const WreathElement& rep() const noexcept { return rep_; }
  const GroupParams& params() const noexcept { return rep_.params(); }
  bool is_identity() const noexcept { return rep_.is_identity(); }

  friend CosetElement operator*(const CosetElement& a, const CosetElement& b) { return CosetElement(a.rep_ * b.rep_); }
  CosetElement inverse() const { return CosetElement(rep_.inverse()); }
  CosetElement pow(long long k) const { return CosetElement(rep_.pow(k)); }

  std::uint64_t order() const {
    std::uint64_t k = 1;
    CosetElement acc = *this;
    while (!acc.is_identity()) {
      acc = acc * *this;
      ++k;
    }
    return k;
  }

  // Dense key in [0, q^(r-1) * r): base digits at positions 2..r, then the shift.
  std::uint64_t key() const noexcept {
    std::uint64_t k = 0;
    const auto& b = rep_.base();
    for (std::size_t j = 1; j < b.size(); ++j) k = k * params().q() + b[j];
    return k * params().r() + rep_.shift();
  }

  friend bool operator==(const CosetElement& a, const CosetElement& b) { return a.rep_ == b.rep_; }

 private:
  static WreathElement normalize(const WreathElement& w) {
    const auto q = w.params().q();
    auto c = w.base().front();
    auto base = w.base();
    for (auto& e : base) e = static_cast<WreathElement::entry_type>((e + q - c) % q);
    return WreathElement(w.params(), std::move(base), w.shift());
  }

  WreathElement rep_;
};

inline CosetElement project(const WreathElement& e) { return CosetElement(e); }
inline CosetElement multiply(const CosetElement& a, const CosetElement& b) { return a * b; }
inline CosetElement invert(const CosetElement& a) { return a.inverse(); }
inline CosetElement power(const CosetElement& a, long long k) { return a.pow(k); }
inline std::uint64_t element_order(const CosetElement& a) { return a.order(); }

// The map induced by t on G/Z; well defined because t maps Z to Z.
inline CosetElement apply_t(const CosetElement& c) { return project(apply_t(c.rep())); }

// --- Group models for the brute-force engine ---------------------------------

struct WreathModel {
  using element_type = WreathElement;
  GroupParams params;

  WreathElement identity() const { return WreathElement::identity(params); }
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const { return a * b; }
  WreathElement invert(const WreathElement& a) const { return a.inverse(); }
  std::uint64_t key(const WreathElement& a) const { return a.key(); }
  std::uint64_t key_space() const { return *params.group_order(); }
};

struct QuotientModel {
  using element_type = CosetElement;
  GroupParams params;

  CosetElement identity() const { return CosetElement::identity(params); }
  CosetElement multiply(const CosetElement& a, const CosetElement& b) const { return a * b; }
  CosetElement invert(const CosetElement& a) const { return a.inverse(); }
  std::uint64_t key(const CosetElement& a) const { return a.key(); }
  std::uint64_t key_space() const { return *params.quotient_order(); }
};

using WreathGroup = SmallGroup<WreathModel>;
using QuotientGroup = SmallGroup<QuotientModel>;

namespace detail {
inline void check_budget(const GroupParams& params, std::uint64_t exponent, std::optional<std::uint64_t> order,
                         std::uint64_t budget) {
  if (!order || *order > budget) throw BudgetExceeded(params.p(), exponent, budget);
}
}  // namespace detail

// Full element table of G = C_q wr C_r, generated from x and y.
inline WreathGroup enumerate_group(const GroupParams& params, std::uint64_t budget = kDefaultBudget) {
  detail::check_budget(params, params.group_order_exponent(), params.group_order(), budget);
  WreathGroup g(WreathModel{params}, {gen_x(params), gen_y(params)});
  if (g.size() != *params.group_order()) throw std::logic_error("x and y failed to generate the wreath product");
  return g;
}

// Full element table of G/Z, generated from the images of x and y.
inline QuotientGroup enumerate_quotient(const GroupParams& params, std::uint64_t budget = kDefaultBudget) {
  detail::check_budget(params, params.quotient_order_exponent(), params.quotient_order(), budget);
  QuotientGroup g(QuotientModel{params}, {project(gen_x(params)), project(gen_y(params))});
  if (g.size() != *params.quotient_order()) throw std::logic_error("quotient enumeration has the wrong order");
  return g;
}

// a and b are conjugate in G/Z iff some central translate of b's lift is
// conjugate in G to a's lift.
inline bool coset_conjugate_test(const CosetElement& a, const CosetElement& b) {
  if (!(a.params() == b.params())) throw ParamsMismatch();
  auto target = conj_invariant(a.rep());
  for (std::uint64_t c = 0; c < a.params().q(); ++c) {
    if (conj_invariant(b.rep() * WreathElement::diagonal(b.params(), c)) == target) return true;
  }
  return false;
}

// Canonical class label in G/Z: the least invariant over the central translates.
inline ConjInvariant quotient_class_label(const CosetElement& a) {
  std::optional<ConjInvariant> best;
  for (std::uint64_t c = 0; c < a.params().q(); ++c) {
    auto inv = conj_invariant(a.rep() * WreathElement::diagonal(a.params(), c));
    if (!best || inv < *best) best = std::move(inv);
  }
  return *best;
}

}  // namespace beauville
