#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "beauville/quotient.hpp"
#include "beauville/sigma.hpp"
#include "beauville/word.hpp"

namespace beauville {

// Which second witness to use: the three-term x^y x x^(y^-1) ("short"), or the
// five-term x^(y^2) x^y x x^(y^-1) x^(y^-2) ("long"). Auto picks long for p = 3.
enum class WordVariant { Auto, Short, Long };

inline WordVariant resolve_variant(const GroupParams& params, WordVariant v) {
  if (v != WordVariant::Auto) return v;
  return params.p() == 3 ? WordVariant::Long : WordVariant::Short;
}

inline std::string to_string(WordVariant v) {
  switch (v) {
    case WordVariant::Auto: return "auto";
    case WordVariant::Short: return "short";
    case WordVariant::Long: return "long";
  }
  return "?";
}

// Number of x-conjugates multiplied together in the second witness.
inline unsigned variant_terms(WordVariant v) { return v == WordVariant::Long ? 5 : 3; }

struct WitnessStructure {
  GroupParams params;
  WordVariant variant;
  WreathElement x1, y1, x2, y2;

  std::array<WreathElement, 4> elements() const { return {x1, y1, x2, y2}; }
  Triple<WreathElement> first() const { return {x1, y1}; }
  Triple<WreathElement> second() const { return {x2, y2}; }

  std::string second_words() const {
    return variant == WordVariant::Long ? "xyx, x^(y^2) x^y x x^(y^-1) x^(y^-2)" : "xyx, x^y x x^(y^-1)";
  }
};

// x^(y^-h) ... x^(y^-1) x x^y ... x^(y^h) evaluated as written, with h = 1 or 2.
inline WreathElement symmetric_conjugate_product(const GroupParams& params, unsigned terms) {
  auto x = gen_x(params);
  auto y = gen_y(params);
  const long long h = (static_cast<long long>(terms) - 1) / 2;
  auto acc = WreathElement::identity(params);
  for (long long k = h; k >= -h; --k) acc = acc * conj(x, y.pow(k));
  return acc;
}

// {x, y} and {xyx, y2}. The long word needs five distinct positions (r >= 5).
inline WitnessStructure build_witness(const GroupParams& params, WordVariant variant = WordVariant::Auto) {
  auto v = resolve_variant(params, variant);
  if (v == WordVariant::Long && params.r() < 5) {
    throw InvalidParams("the five-term witness needs r > 3, got r = " + std::to_string(params.r()));
  }
  auto x = gen_x(params);
  auto y = gen_y(params);
  return {params, v, x, y, x * y * x, symmetric_conjugate_product(params, variant_terms(v))};
}

// --- Strong reality -------------------------------------------------------------

struct StarReport {
  std::array<bool, 4> inverted{};  // x1, y1, x2, y2
  bool passed() const { return inverted[0] && inverted[1] && inverted[2] && inverted[3]; }
};

// t inverts each witness in G.
inline StarReport check_star_star(const WitnessStructure& ws) {
  StarReport rep;
  auto els = ws.elements();
  for (std::size_t i = 0; i < 4; ++i) rep.inverted[i] = apply_t(els[i]) == els[i].inverse();
  return rep;
}

struct QuotientStarReport {
  bool center_preserved = false;
  StarReport inverted;
  bool passed() const { return center_preserved && inverted.passed(); }
};

// The map induced on G/Z by t inverts each projected witness (g_i = identity).
inline QuotientStarReport check_star_in_quotient(const WitnessStructure& ws) {
  QuotientStarReport rep;
  rep.center_preserved = true;
  for (const auto& z : center_elements(ws.params)) {
    if (!is_central(apply_t(z))) rep.center_preserved = false;
  }
  auto els = ws.elements();
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = project(els[i]);
    rep.inverted.inverted[i] = apply_t(c) == c.inverse();
  }
  return rep;
}

// --- Lemma hypotheses and conclusion -------------------------------------------

struct QuotientDirectReport {
  std::uint64_t order = 0;
  bool pair1_generates = false;
  bool pair2_generates = false;
  bool dagger = false;
  bool star = false;
  bool passed() const { return pair1_generates && pair2_generates && dagger && star; }
};

struct LemmaReport {
  bool pair1_generates = false;
  bool pair2_generates = false;
  bool double_dagger = false;
  std::vector<ConjInvariant> common_classes;  // classes shared by the two Sigma-sets in G
  StarReport star_star;
  // Conclusion in G/Z decided with class labels, no enumeration.
  bool quotient_dagger = false;
  // Conclusion in G/Z decided by brute force, when the quotient fits the budget.
  std::optional<QuotientDirectReport> direct;

  bool hypotheses_hold() const { return pair1_generates && pair2_generates && double_dagger && star_star.passed(); }
  bool passed() const { return hypotheses_hold() && quotient_dagger && (!direct || direct->passed()); }
};

inline QuotientDirectReport verify_in_quotient(const WitnessStructure& ws, const QuotientGroup& g) {
  QuotientDirectReport rep;
  rep.order = g.size();
  auto px1 = project(ws.x1), py1 = project(ws.y1), px2 = project(ws.x2), py2 = project(ws.y2);
  rep.pair1_generates = g.brute_generates(px1, py1);
  rep.pair2_generates = g.brute_generates(px2, py2);
  BruteContext<QuotientModel> ctx(g);
  rep.dagger = check_dagger(ctx, sigma(ctx, px1, py1), sigma(ctx, px2, py2));
  rep.star = check_star_in_quotient(ws).passed();
  return rep;
}

inline LemmaReport check_lemma(const WitnessStructure& ws, std::uint64_t budget = kDefaultBudget) {
  LemmaReport rep;
  rep.pair1_generates = generates(ws.x1, ws.y1);
  rep.pair2_generates = generates(ws.x2, ws.y2);
  WreathContext gctx{ws.params};
  auto s1 = sigma(gctx, ws.x1, ws.y1);
  auto s2 = sigma(gctx, ws.x2, ws.y2);
  rep.double_dagger = check_double_dagger(gctx, s1, s2);
  rep.common_classes = common_classes(s1, s2);
  rep.star_star = check_star_star(ws);
  QuotientContext qctx{ws.params};
  rep.quotient_dagger = check_dagger(qctx, sigma(qctx, project(ws.x1), project(ws.y1)),
                                     sigma(qctx, project(ws.x2), project(ws.y2)));
  auto order = ws.params.quotient_order();
  if (order && *order <= budget) rep.direct = verify_in_quotient(ws, enumerate_quotient(ws.params, budget));
  return rep;
}

// --- Exhaustive search -----------------------------------------------------------

struct FoundStructure {
  std::uint32_t x1, y1, x2, y2;  // element indices
};

// Searches every pair of generating pairs of an enumerated group for two whose
// Sigma-sets meet only in the identity. Feasible for groups of a few hundred
// elements.
template <GroupModel Model>
std::optional<FoundStructure> find_beauville_structure(const SmallGroup<Model>& g) {
  BruteContext<Model> ctx(g);
  const auto n = static_cast<std::uint32_t>(g.size());
  const auto nclasses = ctx.classes.members.size();
  const auto identity = ctx.identity_label();

  struct Candidate {
    std::uint32_t a, b;
    std::vector<bool> classes;
  };
  std::vector<Candidate> candidates;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      if (!g.brute_generates(g.element(i), g.element(j))) continue;
      std::vector<bool> bits(nclasses, false);
      for (auto l : sigma(ctx, g.element(i), g.element(j)).classes) bits[l] = true;
      bool duplicate = false;
      for (const auto& c : candidates) {
        if (c.classes == bits) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) candidates.push_back({i, j, std::move(bits)});
    }
  }
  for (std::size_t u = 0; u < candidates.size(); ++u) {
    for (std::size_t v = u + 1; v < candidates.size(); ++v) {
      bool trivial = true;
      for (std::size_t k = 0; k < nclasses && trivial; ++k) {
        if (k != identity && candidates[u].classes[k] && candidates[v].classes[k]) trivial = false;
      }
      if (trivial) return FoundStructure{candidates[u].a, candidates[u].b, candidates[v].a, candidates[v].b};
    }
  }
  return std::nullopt;
}

// --- Constructive generation ----------------------------------------------------

class StepNotCoprime : public std::domain_error {
 public:
  explicit StepNotCoprime(unsigned step)
      : std::domain_error("step " + std::to_string(step) + " shares a factor with the group order") {}
};

struct Reconstruction {
  // Word over a = y2 (the second witness) and b = xyx.
  Word word;
  WreathElement value;
  bool equals_x = false;
  // a (a^-1)^b, compared against the (shifted) difference x^(y^-h) x^-(y^(h+1)).
  bool first_difference_ok = false;
  // x^-1 (xyx) x^-1 = y.
  bool recovers_y = false;
  bool passed() const { return equals_x && first_difference_ok && recovers_y; }
};

// Expresses x as a word in a = y2 and b = xyx. With L terms in a and h = (L-1)/2:
//   a (a^-1)^b = x^(y^-h) x^-(y^(h+1)); conjugating by b^h gives d_1 = x x^-(y^L).
//   d_(k+1) = d_1 (d_k)^(b^L) = x x^-(y^((k+1)L)), so every x x^-(y^i) is reachable
//   because L is a unit mod r. a times x x^-(y^d) over d = +-1..+-h is x^L, and
//   raising to L^-1 mod q gives x.
inline Reconstruction reconstruct_x(const GroupParams& params, WordVariant variant = WordVariant::Auto) {
  const auto ws = build_witness(params, variant);
  const unsigned L = variant_terms(ws.variant);
  if (std::gcd<std::uint64_t, std::uint64_t>(L, params.r()) != 1 ||
      std::gcd<std::uint64_t, std::uint64_t>(L, params.q()) != 1) {
    throw StepNotCoprime(L);
  }
  const long long h = (static_cast<long long>(L) - 1) / 2;
  const auto r = static_cast<long long>(params.r());

  const Word a = Word::letter('a');
  const Word b = Word::letter('b');
  const Word diff = a * a.inverse().conjugated_by(b);
  const Word d1 = diff.conjugated_by(b.pow(h));
  const Word bL = b.pow(L);

  // d_k for k = 1..r-1, built iteratively.
  std::vector<Word> d{Word{}, d1};
  for (long long k = 2; k < r; ++k) d.push_back(d1 * d.back().conjugated_by(bL));

  const auto inv_L_mod_r = static_cast<long long>(detail::inverse_mod(L, params.r()));
  Word xL = a;
  for (long long off = 1; off <= h; ++off) {
    for (long long delta : {off, -off}) {
      auto k = static_cast<std::size_t>(detail::mod(delta * inv_L_mod_r, params.r()));
      xL = xL * d[k];
    }
  }
  const auto u = static_cast<long long>(detail::inverse_mod(L, params.q()));

  Reconstruction rec{xL.pow(u), WreathElement::identity(params)};
  auto lookup = [&](char g) -> const WreathElement& { return g == 'a' ? ws.y2 : ws.x2; };
  rec.value = rec.word.evaluate(WreathElement::identity(params), lookup);

  const auto x = gen_x(params);
  const auto y = gen_y(params);
  rec.equals_x = rec.value == x;
  auto diff_value = diff.evaluate(WreathElement::identity(params), lookup);
  rec.first_difference_ok = diff_value == conj(x, y.pow(-h)) * conj(x, y.pow(h + 1)).inverse();
  rec.recovers_y = x.inverse() * ws.x2 * x.inverse() == y;
  return rec;
}

}  // namespace beauville
