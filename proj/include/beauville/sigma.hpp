#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <set>
#include <vector>

#include "beauville/quotient.hpp"

namespace beauville {

// A context fixes the group an element lives in and how its conjugacy class
// is labelled: complete invariants for G and G/Z, or class ids from a brute
// force class partition.
template <class C>
concept ClassContext = requires(const C& c, const typename C::element_type& e, const typename C::label_type& l) {
  { c.multiply(e, e) } -> std::convertible_to<typename C::element_type>;
  { c.is_identity(e) } -> std::convertible_to<bool>;
  { c.label(e) } -> std::convertible_to<typename C::label_type>;
  { c.identity_label() } -> std::convertible_to<typename C::label_type>;
  { c.is_central_label(l) } -> std::convertible_to<bool>;
};

struct WreathContext {
  using element_type = WreathElement;
  using label_type = ConjInvariant;
  GroupParams params;

  WreathElement multiply(const WreathElement& a, const WreathElement& b) const { return a * b; }
  bool is_identity(const WreathElement& e) const { return e.is_identity(); }
  ConjInvariant label(const WreathElement& e) const { return conj_invariant(e); }
  ConjInvariant identity_label() const { return conj_invariant(WreathElement::identity(params)); }
  bool is_central_label(const ConjInvariant& l) const { return is_central_invariant(l); }
};

struct QuotientContext {
  using element_type = CosetElement;
  using label_type = ConjInvariant;
  GroupParams params;

  CosetElement multiply(const CosetElement& a, const CosetElement& b) const { return a * b; }
  bool is_identity(const CosetElement& e) const { return e.is_identity(); }
  ConjInvariant label(const CosetElement& e) const { return quotient_class_label(e); }
  ConjInvariant identity_label() const { return quotient_class_label(CosetElement::identity(params)); }
  // Only the identity is known to be central in G/Z without enumeration.
  bool is_central_label(const ConjInvariant& l) const { return l == identity_label(); }
};

template <GroupModel Model>
struct BruteContext {
  using element_type = typename Model::element_type;
  using label_type = std::uint32_t;

  explicit BruteContext(const SmallGroup<Model>& g) : group(&g), classes(g.brute_classes()) {}

  const SmallGroup<Model>* group;
  typename SmallGroup<Model>::Classes classes;

  element_type multiply(const element_type& a, const element_type& b) const { return group->model().multiply(a, b); }
  bool is_identity(const element_type& e) const {
    return group->model().key(e) == group->model().key(group->model().identity());
  }
  std::uint32_t label(const element_type& e) const { return classes.class_of[group->index_of(e)]; }
  std::uint32_t identity_label() const { return label(group->model().identity()); }
  bool is_central_label(std::uint32_t l) const { return classes.members[l].size() == 1; }
};

// The generating pair (a, b) together with its product, in that order.
template <class Element>
struct Triple {
  Element a;
  Element b;
  Element ab() const { return a * b; }
  std::vector<Element> members() const { return {a, b, ab()}; }
};

template <class Label>
struct SigmaSet {
  std::set<Label> classes;
  bool contains(const Label& l) const { return classes.contains(l); }
  friend bool operator==(const SigmaSet&, const SigmaSet&) = default;
};

// Classes of all powers of a, b and ab. Powers of an element cycle with its
// order, so running each member up to its own order covers i = 1..|G|.
template <ClassContext Ctx>
SigmaSet<typename Ctx::label_type> sigma(const Ctx& ctx, const typename Ctx::element_type& a,
                                         const typename Ctx::element_type& b) {
  SigmaSet<typename Ctx::label_type> s;
  for (const auto& m : {a, b, ctx.multiply(a, b)}) {
    auto cur = m;
    while (true) {
      s.classes.insert(ctx.label(cur));
      if (ctx.is_identity(cur)) break;
      cur = ctx.multiply(cur, m);
    }
  }
  return s;
}

template <class Label>
std::vector<Label> common_classes(const SigmaSet<Label>& s1, const SigmaSet<Label>& s2) {
  std::vector<Label> out;
  std::set_intersection(s1.classes.begin(), s1.classes.end(), s2.classes.begin(), s2.classes.end(),
                        std::back_inserter(out));
  return out;
}

// Condition that the two Sigma-sets meet only in the identity.
template <ClassContext Ctx>
bool check_dagger(const Ctx& ctx, const SigmaSet<typename Ctx::label_type>& s1,
                  const SigmaSet<typename Ctx::label_type>& s2) {
  auto common = common_classes(s1, s2);
  return common.size() == 1 && common.front() == ctx.identity_label();
}

// Condition that the two Sigma-sets meet only in (singleton) central classes.
template <ClassContext Ctx>
bool check_double_dagger(const Ctx& ctx, const SigmaSet<typename Ctx::label_type>& s1,
                         const SigmaSet<typename Ctx::label_type>& s2) {
  auto common = common_classes(s1, s2);
  return std::all_of(common.begin(), common.end(), [&](const auto& l) { return ctx.is_central_label(l); });
}

}  // namespace beauville
