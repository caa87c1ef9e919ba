#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace beauville {

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Exponent k with n = p^k, or nullopt if n is not a power of p.
inline std::optional<unsigned> log_exact(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return std::nullopt;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

inline std::uint64_t mod(long long a, std::uint64_t m) {
  auto r = a % static_cast<long long>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(m) : r);
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    long long q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw std::domain_error("value not invertible modulo " + std::to_string(m));
  return mod(t, m);
}

// base^exp, or nullopt on overflow of 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace detail

// Parameters of C_q wr C_r: p an odd prime, q = p^b and r = p^a with a, b >= 1.
class GroupParams {
 public:
  GroupParams(std::uint64_t p, std::uint64_t q, std::uint64_t r) : p_(p), q_(q), r_(r) {
    if (p == 2) throw InvalidParams("p = 2 is not supported: the construction needs an odd prime");
    if (!detail::is_prime(p)) throw InvalidParams("p = " + std::to_string(p) + " is not prime");
    auto b = detail::log_exact(q, p);
    auto a = detail::log_exact(r, p);
    if (!b || *b == 0) {
      throw InvalidParams("q = " + std::to_string(q) + " is not a positive power of " + std::to_string(p));
    }
    if (!a || *a == 0) {
      throw InvalidParams("r = " + std::to_string(r) + " is not a positive power of " + std::to_string(p));
    }
    q_exp_ = *b;
    r_exp_ = *a;
  }

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t r() const noexcept { return r_; }
  unsigned q_exponent() const noexcept { return q_exp_; }
  unsigned r_exponent() const noexcept { return r_exp_; }

  // Position of x's unit base entry, 1-based.
  std::uint64_t midpoint() const noexcept { return (r_ + 1) / 2; }

  std::uint64_t degree() const noexcept { return q_ * r_; }

  // |G| = q^r * r and |G/Z| = q^(r-1) * r, as exponents of p.
  std::uint64_t group_order_exponent() const noexcept { return q_exp_ * r_ + r_exp_; }
  std::uint64_t quotient_order_exponent() const noexcept { return q_exp_ * (r_ - 1) + r_exp_; }

  std::optional<std::uint64_t> group_order() const {
    return detail::checked_pow(p_, group_order_exponent());
  }
  std::optional<std::uint64_t> quotient_order() const {
    return detail::checked_pow(p_, quotient_order_exponent());
  }

  // The witness structure needs r > 3 when p = 3; the group itself does not.
  bool supports_structure() const noexcept { return !(p_ == 3 && r_ <= 3); }

  std::string to_string() const {
    return "(p=" + std::to_string(p_) + ", q=" + std::to_string(q_) + ", r=" + std::to_string(r_) + ")";
  }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
  std::uint64_t r_;
  unsigned q_exp_ = 0;
  unsigned r_exp_ = 0;
};

class ParamsMismatch : public std::invalid_argument {
 public:
  ParamsMismatch() : std::invalid_argument("operands belong to different groups") {}
};

}  // namespace beauville
