#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace beauville {

class ModulusMismatch : public std::invalid_argument {
 public:
  ModulusMismatch(std::uint64_t a, std::uint64_t b)
      : std::invalid_argument("moduli " + std::to_string(a) + " and " + std::to_string(b) +
                              " are not powers of a common prime") {}
};

// Element of Z[zeta_N] for N a prime power, in the power basis
// {zeta^e : 0 <= e < phi(N)}. Exponents at or above phi(N) are rewritten
// with 1 + z^(N/p) + ... + z^((p-1)N/p) = 0, which makes the coefficient
// vector a canonical form: equal values have equal coefficients.
class CycInt {
 public:
  using Coefficient = boost::multiprecision::cpp_int;

  CycInt() : CycInt(1) {}

  explicit CycInt(std::uint64_t modulus, Coefficient constant = 0) : n_(modulus) {
    if (modulus == 0) throw std::invalid_argument("modulus must be positive");
    p_ = prime_of(modulus);
    coeffs_.assign(phi(), Coefficient(0));
    coeffs_[0] = std::move(constant);
  }

  // zeta_n^i with zeta_n a fixed primitive n-th root of unity.
  static CycInt root_power(std::uint64_t n, long long i) {
    CycInt z(n);
    std::vector<Coefficient> full(n, Coefficient(0));
    full[static_cast<std::size_t>(((i % static_cast<long long>(n)) + static_cast<long long>(n)) %
                                  static_cast<long long>(n))] = 1;
    z.reduce_from(std::move(full));
    return z;
  }

  std::uint64_t modulus() const noexcept { return n_; }
  std::uint64_t prime() const noexcept { return p_; }
  const std::vector<Coefficient>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  // Image in Z[zeta_M] under zeta_N -> zeta_M^(M/N); M must be a multiple of N
  // within the same prime tower.
  CycInt embed(std::uint64_t target) const {
    if (target == n_) return *this;
    if (target % n_ != 0 || (n_ > 1 && prime_of(target) != p_)) throw ModulusMismatch(n_, target);
    CycInt out(target);
    std::vector<Coefficient> full(target, Coefficient(0));
    const auto step = target / n_;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) full[e * step] += coeffs_[e];
    out.reduce_from(std::move(full));
    return out;
  }

  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    auto [x, y] = common(a, b);
    for (std::size_t e = 0; e < x.coeffs_.size(); ++e) x.coeffs_[e] += y.coeffs_[e];
    return x;
  }

  friend CycInt operator-(const CycInt& a, const CycInt& b) {
    auto [x, y] = common(a, b);
    for (std::size_t e = 0; e < x.coeffs_.size(); ++e) x.coeffs_[e] -= y.coeffs_[e];
    return x;
  }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    auto [x, y] = common(a, b);
    const auto n = x.n_;
    std::vector<Coefficient> full(n, Coefficient(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
        if (y.coeffs_[j] == 0) continue;
        full[(i + j) % n] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    CycInt out(n);
    out.reduce_from(std::move(full));
    return out;
  }

  friend CycInt operator+(const CycInt& a, long long k) { return a + CycInt(a.n_, k); }

  friend bool operator==(const CycInt& a, const CycInt& b) {
    auto [x, y] = common(a, b);
    return x.coeffs_ == y.coeffs_;
  }

  // Total order for use as a map key; only meaningful within one modulus.
  friend bool operator<(const CycInt& a, const CycInt& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.coeffs_ < b.coeffs_;
  }

  // Value at zeta_N = exp(2 pi i / N).
  std::complex<double> evaluate() const {
    std::complex<double> acc = 0;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      if (coeffs_[e] == 0) continue;
      double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n_);
      acc += coeffs_[e].convert_to<double>() * std::polar(1.0, angle);
    }
    return acc;
  }

  // Nonzero terms as (exponent, coefficient).
  std::vector<std::pair<std::uint64_t, Coefficient>> terms() const {
    std::vector<std::pair<std::uint64_t, Coefficient>> out;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      if (coeffs_[e] != 0) out.emplace_back(e, coeffs_[e]);
    }
    return out;
  }

  // e.g. "21 + z25^5 - 2*z25^3".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
      Coefficient mag = c < 0 ? Coefficient(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag << '*';
      os << 'z' << n_;
      if (e != 1) os << '^' << e;
    }
    if (first) os << '0';
    return os.str();
  }

 private:
  static std::uint64_t prime_of(std::uint64_t n) {
    if (n == 1) return 1;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    auto m = n;
    while (m % p == 0) m /= p;
    if (m != 1) throw std::invalid_argument("modulus " + std::to_string(n) + " is not a prime power");
    return p;
  }

  std::size_t phi() const noexcept { return n_ == 1 ? 1 : static_cast<std::size_t>(n_ - n_ / p_); }

  static std::pair<CycInt, CycInt> common(const CycInt& a, const CycInt& b) {
    if (a.n_ == b.n_) return {a, b};
    if (a.n_ > 1 && b.n_ > 1 && a.p_ != b.p_) throw ModulusMismatch(a.n_, b.n_);
    auto target = std::max(a.n_, b.n_);
    return {a.embed(target), b.embed(target)};
  }

  // full has length N and is indexed by exponent mod N. For e = phi + j
  // (0 <= j < N/p): zeta^e = -sum_{k=0}^{p-2} zeta^(k N/p + j).
  void reduce_from(std::vector<Coefficient> full) {
    if (n_ == 1) {
      coeffs_.assign(1, full[0]);
      return;
    }
    const auto ph = phi();
    const auto block = n_ / p_;
    for (std::size_t e = full.size(); e-- > ph;) {
      if (full[e] == 0) continue;
      Coefficient c = std::move(full[e]);
      full[e] = 0;
      const auto j = e - ph;
      for (std::uint64_t k = 0; k + 1 < p_; ++k) full[k * block + j] -= c;
    }
    full.resize(ph);
    coeffs_ = std::move(full);
  }

  std::uint64_t n_;
  std::uint64_t p_ = 1;
  std::vector<Coefficient> coeffs_;
};

inline CycInt root_power(std::uint64_t n, long long i) { return CycInt::root_power(n, i); }
inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline bool cyc_eq(const CycInt& a, const CycInt& b) { return a == b; }

}  // namespace beauville
