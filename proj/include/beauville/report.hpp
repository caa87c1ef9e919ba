#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "beauville/beauville.hpp"
#include "beauville/census.hpp"
#include "beauville/trace.hpp"

namespace beauville {

inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  Json details = Json::object();
  friend bool operator==(const Check&, const Check&) = default;
};

struct VerifyReport {
  std::string version = kVersion;
  std::uint64_t p = 0, q = 0, r = 0;
  std::vector<Check> checks;
  bool verdict = false;

  void add(Check c) { checks.push_back(std::move(c)); }
  void finalize() {
    verdict = !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

inline void to_json(Json& j, const Check& c) { j = Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}}; }

inline void from_json(const Json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.pass = j.at("pass").get<bool>();
  c.details = j.at("details");
}

inline void to_json(Json& j, const VerifyReport& r) {
  j = Json{{"version", r.version},
           {"params", Json{{"p", r.p}, {"q", r.q}, {"r", r.r}}},
           {"checks", r.checks},
           {"verdict", r.verdict ? "pass" : "fail"}};
}

inline void from_json(const Json& j, VerifyReport& r) {
  r.version = j.at("version").get<std::string>();
  r.p = j.at("params").at("p").get<std::uint64_t>();
  r.q = j.at("params").at("q").get<std::uint64_t>();
  r.r = j.at("params").at("r").get<std::uint64_t>();
  r.checks = j.at("checks").get<std::vector<Check>>();
  r.verdict = j.at("verdict").get<std::string>() == "pass";
}

inline Json cyc_to_json(const CycInt& c) {
  Json terms = Json::array();
  for (const auto& [e, k] : c.terms()) terms.push_back(Json::array({e, k.str()}));
  return Json{{"modulus", c.modulus()}, {"terms", terms}};
}

namespace detail {

inline std::string big(const BigInt& n) { return n.str(); }

inline Check witness_check(const WitnessStructure& ws) {
  return {"witness",
          true,
          Json{{"variant", to_string(ws.variant)},
               {"pair1", "x, y"},
               {"pair2", ws.second_words()},
               {"x2", ws.x2.to_string()},
               {"y2", ws.y2.to_string()}}};
}

inline Check relations_check(const GroupParams& params) {
  auto rel = verify_relations(params);
  return {"relations",
          rel.passed(),
          Json{{"x^q", rel.x_order_q},
               {"y^r", rel.y_order_r},
               {"commutators", rel.commutators_trivial},
               {"group_order", big(rel.group_order)},
               {"expected_order", big(rel.expected_order)}}};
}

inline Check involution_check(const WitnessStructure& ws) {
  const auto& P = ws.params;
  auto t = involution_t(P);
  auto xi = xi_permutation(P);
  auto up = upsilon_permutation(P);
  bool t2 = (t * t).is_identity();
  bool xi_inv = conjugate(xi, t) == xi.inverse();
  bool up_inv = conjugate(up, t) == up.inverse();
  return {"involution", t2 && xi_inv && up_inv, Json{{"t^2=e", t2}, {"Xi^t=Xi^-1", xi_inv}, {"Upsilon^t=Upsilon^-1", up_inv}}};
}

// Class partitions from invariants must coincide with brute-force classes.
template <GroupModel Model, class LabelFn>
bool partition_matches(const SmallGroup<Model>& g, const typename SmallGroup<Model>::Classes& classes, LabelFn label) {
  std::map<ConjInvariant, std::uint32_t> seen;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    auto inv = label(g.element(i));
    auto [it, inserted] = seen.emplace(std::move(inv), classes.class_of[i]);
    if (!inserted && it->second != classes.class_of[i]) return false;
  }
  return seen.size() == classes.members.size();
}

inline Check invariant_validation_check(const GroupParams& params, std::uint64_t budget) {
  Json d = Json::object();
  bool pass = true;
  auto gorder = params.group_order();
  if (gorder && *gorder <= budget) {
    auto g = enumerate_group(params, budget);
    auto classes = g.brute_classes();
    bool ok = partition_matches(g, classes, [](const WreathElement& e) { return conj_invariant(e); });
    d["group"] = Json{{"order", g.size()}, {"classes", classes.members.size()}, {"matches", ok}};
    pass = pass && ok;
  } else {
    d["group"] = Json{{"skipped", "group order exceeds budget"}};
  }
  auto qorder = params.quotient_order();
  if (qorder && *qorder <= budget) {
    auto g = enumerate_quotient(params, budget);
    auto classes = g.brute_classes();
    bool ok = partition_matches(g, classes, [](const CosetElement& e) { return quotient_class_label(e); });
    d["quotient"] = Json{{"order", g.size()}, {"classes", classes.members.size()}, {"matches", ok}};
    pass = pass && ok;
  } else {
    d["quotient"] = Json{{"skipped", "quotient order exceeds budget"}};
  }
  return {"conj-invariant-validation", pass, d};
}

inline Json frattini_json(const WreathElement& e) {
  auto f = frattini_image(e);
  return Json::array({f.base_sum, f.shift});
}

inline Check generation_check(const WitnessStructure& ws) {
  bool g1 = generates(ws.x1, ws.y1);
  bool g2 = generates(ws.x2, ws.y2);
  return {"generation",
          g1 && g2,
          Json{{"pair1", g1},
               {"pair2", g2},
               {"frattini", Json{{"x1", frattini_json(ws.x1)},
                                 {"y1", frattini_json(ws.y1)},
                                 {"x2", frattini_json(ws.x2)},
                                 {"y2", frattini_json(ws.y2)}}}}};
}

inline Check reconstruction_check(const WitnessStructure& ws) {
  try {
    auto rec = reconstruct_x(ws.params, ws.variant);
    return {"reconstruction",
            rec.passed(),
            Json{{"equals_x", rec.equals_x},
                 {"first_difference", rec.first_difference_ok},
                 {"recovers_y", rec.recovers_y},
                 {"alphabet", "a = y2, b = xyx"},
                 {"length", rec.word.length()},
                 {"word", rec.word.to_string()}}};
  } catch (const StepNotCoprime& e) {
    return {"reconstruction", false, Json{{"error", e.what()}}};
  }
}

inline Check double_dagger_check(const WitnessStructure& ws, const LemmaReport& lemma) {
  auto cert = distinctness_certificate(ws.first(), ws.second());
  Json collisions = Json::array();
  for (const auto& c : cert.collisions) {
    collisions.push_back(Json{{"member1", c.member1},
                              {"power1", c.power1},
                              {"member2", c.member2},
                              {"power2", c.power2},
                              {"conjugate", c.conjugate}});
  }
  Json common = Json::array();
  for (const auto& c : lemma.common_classes) common.push_back(c.to_string());
  return {"double-dagger",
          lemma.double_dagger && cert.holds(),
          Json{{"invariants", lemma.double_dagger},
               {"common_classes", common},
               {"trace_certificate", cert.holds()},
               {"comparisons", cert.comparisons},
               {"collisions", collisions}}};
}

inline Check star_check(const StarReport& s) {
  return {"star-star",
          s.passed(),
          Json{{"x1", s.inverted[0]}, {"y1", s.inverted[1]}, {"x2", s.inverted[2]}, {"y2", s.inverted[3]}}};
}

inline Check trace_check(const GroupParams& params) {
  auto rep = verify_trace_formulas(params);
  Json fams = Json::array();
  for (const auto& f : rep.families) {
    fams.push_back(Json{{"family", f.formula}, {"closed_form", f.closed_form}, {"powers", f.powers_checked}, {"ok", f.ok}});
  }
  Json d{{"families", fams}};
  if (rep.counterexample) {
    d["counterexample"] = Json{{"family", rep.counterexample->family},
                               {"power", rep.counterexample->power},
                               {"expected", rep.counterexample->expected},
                               {"computed", rep.counterexample->computed}};
  }
  return {"trace-formulas", rep.passed(), d};
}

inline Check quotient_direct_check(const LemmaReport& lemma) {
  if (!lemma.direct) return {"quotient-direct", true, Json{{"skipped", "quotient order exceeds budget"}}};
  const auto& d = *lemma.direct;
  return {"quotient-direct",
          d.passed(),
          Json{{"order", d.order},
               {"pair1_generates", d.pair1_generates},
               {"pair2_generates", d.pair2_generates},
               {"dagger", d.dagger},
               {"star", d.star}}};
}

}  // namespace detail

// Full pipeline: lemma hypotheses in G, conclusion in G/Z by class labels, and
// brute-force confirmation in G/Z when it fits the budget.
inline VerifyReport run_verify(const GroupParams& params, WordVariant variant = WordVariant::Auto,
                               std::uint64_t budget = kDefaultBudget) {
  VerifyReport rep;
  rep.p = params.p();
  rep.q = params.q();
  rep.r = params.r();
  auto ws = build_witness(params, variant);
  rep.add(detail::witness_check(ws));
  rep.add(detail::relations_check(params));
  rep.add(detail::involution_check(ws));
  rep.add(detail::invariant_validation_check(params, budget));
  rep.add(detail::generation_check(ws));
  rep.add(detail::reconstruction_check(ws));
  auto lemma = check_lemma(ws, budget);
  rep.add(detail::double_dagger_check(ws, lemma));
  rep.add(detail::star_check(lemma.star_star));
  rep.add(detail::trace_check(params));
  rep.add({"quotient-dagger", lemma.quotient_dagger, Json::object()});
  rep.add(detail::quotient_direct_check(lemma));
  rep.finalize();
  return rep;
}

// Brute force only: every verdict comes from the enumerated quotient.
// Throws BudgetExceeded when G/Z is too large.
inline VerifyReport run_oracle(const GroupParams& params, WordVariant variant = WordVariant::Auto,
                               std::uint64_t budget = kDefaultBudget) {
  VerifyReport rep;
  rep.p = params.p();
  rep.q = params.q();
  rep.r = params.r();
  auto ws = build_witness(params, variant);
  auto g = enumerate_quotient(params, budget);
  rep.add(detail::witness_check(ws));
  rep.add({"quotient-enumeration", g.size() == *params.quotient_order(), Json{{"order", g.size()}}});
  auto px1 = project(ws.x1), py1 = project(ws.y1), px2 = project(ws.x2), py2 = project(ws.y2);
  bool g1 = g.brute_generates(px1, py1);
  bool g2 = g.brute_generates(px2, py2);
  rep.add({"generation", g1 && g2, Json{{"pair1", g1}, {"pair2", g2}}});
  BruteContext<QuotientModel> ctx(g);
  auto s1 = sigma(ctx, px1, py1);
  auto s2 = sigma(ctx, px2, py2);
  auto common = common_classes(s1, s2);
  rep.add({"dagger",
           check_dagger(ctx, s1, s2),
           Json{{"classes", ctx.classes.members.size()},
                {"sigma1", s1.classes.size()},
                {"sigma2", s2.classes.size()},
                {"common", common.size()}}});
  std::array<bool, 4> inv{};
  std::array<CosetElement, 4> proj{px1, py1, px2, py2};
  for (std::size_t i = 0; i < 4; ++i) inv[i] = apply_t(proj[i]) == proj[i].inverse();
  rep.add({"star",
           inv[0] && inv[1] && inv[2] && inv[3],
           Json{{"x1", inv[0]}, {"y1", inv[1]}, {"x2", inv[2]}, {"y2", inv[3]}}});
  rep.finalize();
  return rep;
}

}  // namespace beauville
