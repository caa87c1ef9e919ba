#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beauville/beauville.hpp"
#include "beauville/cyclotomic.hpp"
#include "beauville/wreath.hpp"

namespace beauville {

// Trace of an element in the degree qr + 2 representation W + V1 + V2: the
// permutation character on {1..qr}, plus zeta_q^(base sum), plus zeta_r^shift.
// Computed from the normal form; the matrices are never built.
inline CycInt trace(const WreathElement& e) {
  const auto& P = e.params();
  const auto N = std::max(P.q(), P.r());
  std::uint64_t fixed = 0;
  if (e.shift() == 0) {
    fixed = P.q() * static_cast<std::uint64_t>(std::count(e.base().begin(), e.base().end(), 0u));
  }
  return CycInt(N, fixed) + root_power(P.q(), static_cast<long long>(e.base_sum())) +
         root_power(P.r(), static_cast<long long>(e.shift()));
}

struct TraceFamily {
  std::string name;   // e.g. "X^Y X X^(Y^-1)"
  bool closed_form;   // false for families derived for the five-term word
  std::function<WreathElement(const GroupParams&)> element;
  std::function<CycInt(const GroupParams&, long long)> formula;
  std::function<std::string(const GroupParams&)> text;
};

namespace detail {

inline std::string zeta(std::uint64_t n, const std::string& exponent) {
  return "ζ_" + std::to_string(n) + "^" + exponent;
}

// Tr = qr - k q + 1 + zeta_q^(k i): k x-conjugates at distinct positions, no shift.
inline TraceFamily base_family(std::string name, bool closed, unsigned k,
                               std::function<WreathElement(const GroupParams&)> element) {
  return {std::move(name), closed, std::move(element),
          [k](const GroupParams& P, long long i) {
            return CycInt(std::max(P.q(), P.r()), static_cast<long long>(P.q() * P.r() - k * P.q() + 1)) +
                   root_power(P.q(), static_cast<long long>(k) * i);
          },
          [k](const GroupParams& P) {
            auto coeff = k == 1 ? std::string("i") : "(" + std::to_string(k) + "i)";
            return std::to_string(P.q() * P.r() - k * P.q() + 1) + " + " + zeta(P.q(), coeff);
          }};
}

// Tr = zeta_q^(s i) + zeta_r^i: base sum s, shift 1.
inline TraceFamily shift_family(std::string name, bool closed, unsigned s,
                                std::function<WreathElement(const GroupParams&)> element) {
  return {std::move(name), closed, std::move(element),
          [s](const GroupParams& P, long long i) {
            return CycInt(std::max(P.q(), P.r())) + root_power(P.q(), static_cast<long long>(s) * i) +
                   root_power(P.r(), i);
          },
          [s](const GroupParams& P) {
            auto coeff = s == 1 ? std::string("i") : "(" + std::to_string(s) + "i)";
            return zeta(P.q(), coeff) + " + " + zeta(P.r(), "i");
          }};
}

}  // namespace detail

// The six closed-form families for x, y, xy, x^y x x^(y^-1), xyx and their
// product, plus (for r >= 5) the two families of the five-term word.
inline std::vector<TraceFamily> trace_families(const GroupParams& params) {
  auto x = [](const GroupParams& P) { return gen_x(P); };
  auto y = [](const GroupParams& P) { return gen_y(P); };
  auto xy = [](const GroupParams& P) { return gen_x(P) * gen_y(P); };
  auto a3 = [](const GroupParams& P) { return symmetric_conjugate_product(P, 3); };
  auto xyx = [](const GroupParams& P) { return gen_x(P) * gen_y(P) * gen_x(P); };
  auto a3xyx = [](const GroupParams& P) { return symmetric_conjugate_product(P, 3) * gen_x(P) * gen_y(P) * gen_x(P); };

  std::vector<TraceFamily> out;
  out.push_back(detail::base_family("X", true, 1, x));
  out.push_back({"Y", true, y,
                 [](const GroupParams& P, long long i) {
                   return CycInt(std::max(P.q(), P.r()), 1) + root_power(P.r(), i);
                 },
                 [](const GroupParams& P) { return "1 + " + detail::zeta(P.r(), "i"); }});
  out.push_back(detail::shift_family("XY", true, 1, xy));
  out.push_back(detail::base_family("X^Y X X^(Y^-1)", true, 3, a3));
  out.push_back(detail::shift_family("XYX", true, 2, xyx));
  out.push_back(detail::shift_family("X^Y X X^(Y^-1) XYX", true, 5, a3xyx));
  if (params.r() >= 5) {
    auto a5 = [](const GroupParams& P) { return symmetric_conjugate_product(P, 5); };
    auto a5xyx = [](const GroupParams& P) {
      return symmetric_conjugate_product(P, 5) * gen_x(P) * gen_y(P) * gen_x(P);
    };
    out.push_back(detail::base_family("X^(Y^2) X^Y X X^(Y^-1) X^(Y^-2)", false, 5, a5));
    out.push_back(detail::shift_family("X^(Y^2) X^Y X X^(Y^-1) X^(Y^-2) XYX", false, 7, a5xyx));
  }
  return out;
}

struct TraceFamilyResult {
  std::string name;
  std::string formula;
  bool closed_form = true;
  std::uint64_t powers_checked = 0;
  bool ok = true;
};

struct TraceCounterexample {
  std::string family;
  std::uint64_t power = 0;
  std::string expected;
  std::string computed;
};

struct TraceFormulaReport {
  std::vector<TraceFamilyResult> families;
  std::optional<TraceCounterexample> counterexample;
  bool passed() const {
    return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.ok; });
  }
};

// Checks every family against the exact trace for each non-identity power.
inline TraceFormulaReport verify_trace_formulas(const GroupParams& params) {
  TraceFormulaReport rep;
  for (const auto& fam : trace_families(params)) {
    auto lhs = fam.name.size() == 1 ? "Tr(" + fam.name + "^i)" : "Tr((" + fam.name + ")^i)";
    TraceFamilyResult res{fam.name, lhs + " = " + fam.text(params), fam.closed_form};
    auto g = fam.element(params);
    auto cur = g;
    for (long long i = 1; !cur.is_identity(); ++i, cur = cur * g) {
      ++res.powers_checked;
      auto computed = trace(cur);
      auto expected = fam.formula(params, i);
      if (!(computed == expected)) {
        res.ok = false;
        if (!rep.counterexample) {
          rep.counterexample =
              TraceCounterexample{fam.name, static_cast<std::uint64_t>(i), expected.to_string(), computed.to_string()};
        }
      }
    }
    rep.families.push_back(std::move(res));
  }
  return rep;
}

// --- Non-conjugacy certificates ----------------------------------------------

struct TraceCollision {
  std::size_t member1 = 0;  // index into (a, b, ab) of the first triple
  std::uint64_t power1 = 0;
  std::size_t member2 = 0;
  std::uint64_t power2 = 0;
  bool conjugate = false;
};

struct CertificateReport {
  std::uint64_t comparisons = 0;  // pairs of non-central powers
  std::vector<TraceCollision> collisions;
  bool holds() const {
    return std::none_of(collisions.begin(), collisions.end(), [](const auto& c) { return c.conjugate; });
  }
};

// Every non-central power of t1's members against every non-central power of
// t2's members: distinct traces certify non-conjugacy; equal traces fall back
// to the exact conjugacy test and are logged.
inline CertificateReport distinctness_certificate(const Triple<WreathElement>& t1, const Triple<WreathElement>& t2) {
  struct Power {
    std::size_t member;
    std::uint64_t power;
    WreathElement value;
  };
  auto powers = [](const Triple<WreathElement>& t) {
    std::vector<std::pair<CycInt, Power>> out;
    auto members = t.members();
    for (std::size_t m = 0; m < members.size(); ++m) {
      auto cur = members[m];
      for (std::uint64_t i = 1; !cur.is_identity(); ++i, cur = cur * members[m]) {
        if (!is_central(cur)) out.push_back({trace(cur), Power{m, i, cur}});
      }
    }
    return out;
  };

  CertificateReport rep;
  auto left = powers(t1);
  auto right = powers(t2);
  rep.comparisons = static_cast<std::uint64_t>(left.size()) * right.size();
  std::multimap<CycInt, const Power*> by_trace;
  for (const auto& [tr, pw] : right) by_trace.emplace(tr, &pw);
  for (const auto& [tr, pw] : left) {
    auto [lo, hi] = by_trace.equal_range(tr);
    for (auto it = lo; it != hi; ++it) {
      const Power& other = *it->second;
      rep.collisions.push_back({pw.member, pw.power, other.member, other.power, are_conjugate(pw.value, other.value)});
    }
  }
  return rep;
}

}  // namespace beauville
