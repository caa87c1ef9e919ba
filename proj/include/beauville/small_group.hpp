#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace beauville {

class BudgetExceeded : public std::runtime_error {
 public:
  // The offending order is p^exponent.
  BudgetExceeded(std::uint64_t p, std::uint64_t exponent, std::uint64_t budget)
      : std::runtime_error("group order " + std::to_string(p) + "^" + std::to_string(exponent) +
                           " exceeds the enumeration budget of " + std::to_string(budget) + " elements"),
        p_(p),
        exponent_(exponent),
        budget_(budget) {}

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t p_;
  std::uint64_t exponent_;
  std::uint64_t budget_;
};

// A model supplies the group law and a dense integer key for each element.
template <class M>
concept GroupModel = requires(const M& m, const typename M::element_type& e) {
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.multiply(e, e) } -> std::convertible_to<typename M::element_type>;
  { m.invert(e) } -> std::convertible_to<typename M::element_type>;
  { m.key(e) } -> std::convertible_to<std::uint64_t>;
  { m.key_space() } -> std::convertible_to<std::uint64_t>;
};

// A fully enumerated finite group. Every query is answered by brute force on
// the element table, independently of any structural shortcut; this is the
// oracle the invariant-based fast paths are checked against.
template <GroupModel Model>
class SmallGroup {
 public:
  using element_type = typename Model::element_type;
  static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);

  struct Classes {
    std::vector<std::uint32_t> class_of;  // element index -> class id
    std::vector<std::vector<std::uint32_t>> members;
  };

  // Closure of the generators under right multiplication.
  SmallGroup(Model model, std::vector<element_type> generators)
      : model_(std::move(model)), generators_(std::move(generators)) {
    index_.assign(model_.key_space(), npos);
    add(model_.identity());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const auto& g : generators_) {
        auto next = model_.multiply(elements_[i], g);
        if (index_[model_.key(next)] == npos) add(std::move(next));
      }
    }
    smallest_prime_ = smallest_prime_factor(elements_.size());
  }

  const Model& model() const noexcept { return model_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<element_type>& elements() const noexcept { return elements_; }
  const element_type& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<element_type>& generators() const noexcept { return generators_; }

  std::uint32_t index_of(const element_type& e) const {
    auto k = model_.key(e);
    if (k >= index_.size() || index_[k] == npos) throw std::out_of_range("element not in group");
    return index_[k];
  }

  bool contains(const element_type& e) const {
    auto k = model_.key(e);
    return k < index_.size() && index_[k] != npos;
  }

  // Orbits of the conjugation action. Conjugating by the group generators
  // reaches every conjugate, so orbits under them are the full classes.
  Classes brute_classes() const {
    Classes c;
    c.class_of.assign(size(), npos);
    std::vector<element_type> gen_inv;
    for (const auto& g : generators_) gen_inv.push_back(model_.invert(g));
    for (std::uint32_t start = 0; start < size(); ++start) {
      if (c.class_of[start] != npos) continue;
      auto id = static_cast<std::uint32_t>(c.members.size());
      std::vector<std::uint32_t> orbit{start};
      c.class_of[start] = id;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
          auto conj = model_.multiply(model_.multiply(gen_inv[gi], elements_[orbit[k]]), generators_[gi]);
          auto idx = index_of(conj);
          if (c.class_of[idx] == npos) {
            c.class_of[idx] = id;
            orbit.push_back(idx);
          }
        }
      }
      c.members.push_back(std::move(orbit));
    }
    return c;
  }

  // Conjugacy class by the definition: { k^-1 e k : k in G }.
  std::vector<std::uint32_t> literal_class(const element_type& e) const {
    std::vector<bool> hit(size(), false);
    std::vector<std::uint32_t> out;
    for (const auto& k : elements_) {
      auto idx = index_of(model_.multiply(model_.multiply(model_.invert(k), e), k));
      if (!hit[idx]) {
        hit[idx] = true;
        out.push_back(idx);
      }
    }
    return out;
  }

  // Order of <gens> by closure.
  std::size_t subgroup_order(const std::vector<element_type>& gens, std::size_t stop_above = 0) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::uint32_t> queue{index_of(model_.identity())};
    seen[queue.front()] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      if (stop_above && queue.size() > stop_above) return size();
      for (const auto& g : gens) {
        auto idx = index_of(model_.multiply(elements_[queue[k]], g));
        if (!seen[idx]) {
          seen[idx] = true;
          queue.push_back(idx);
        }
      }
    }
    return queue.size();
  }

  // A proper subgroup has index at least the smallest prime divisor of |G|,
  // so the closure can stop once it is larger than |G| / that prime.
  bool brute_generates(const element_type& a, const element_type& b) const {
    return subgroup_order({a, b}, size() / smallest_prime_) == size();
  }

  std::vector<std::uint32_t> brute_center() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < size(); ++i) {
      bool central = true;
      for (const auto& g : generators_) {
        if (model_.key(model_.multiply(elements_[i], g)) != model_.key(model_.multiply(g, elements_[i]))) {
          central = false;
          break;
        }
      }
      if (central) out.push_back(i);
    }
    return out;
  }

 private:
  void add(element_type e) {
    index_[model_.key(e)] = static_cast<std::uint32_t>(elements_.size());
    elements_.push_back(std::move(e));
  }

  static std::size_t smallest_prime_factor(std::size_t n) {
    for (std::size_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return d;
    }
    return n < 2 ? 1 : n;
  }

  Model model_;
  std::vector<element_type> generators_;
  std::vector<element_type> elements_;
  std::vector<std::uint32_t> index_;
  std::size_t smallest_prime_ = 1;
};

template <GroupModel Model>
typename SmallGroup<Model>::Classes brute_classes(const SmallGroup<Model>& g) {
  return g.brute_classes();
}

template <GroupModel Model>
bool brute_generates(const SmallGroup<Model>& g, const typename Model::element_type& a,
                     const typename Model::element_type& b) {
  return g.brute_generates(a, b);
}

template <GroupModel Model>
std::vector<std::uint32_t> brute_center(const SmallGroup<Model>& g) {
  return g.brute_center();
}

}  // namespace beauville
