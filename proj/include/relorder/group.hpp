#pragma once

// Finite groups are call-based: every group fixes a bijection between its
// elements and the encodings [0, n), with the identity at 0. Algorithms are
// templates over the FiniteGroup concept; AnyGroup erases the concrete type
// for heterogeneous catalogs.

#include "relorder/errors.hpp"

#include <concepts>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace relorder {

using Element = std::uint64_t;

template <typename G>
concept FiniteGroup = requires(const G& g, Element a, Element b) {
  { g.order() } -> std::convertible_to<std::uint64_t>;
  { g.identity() } -> std::convertible_to<Element>;
  { g.multiply(a, b) } -> std::convertible_to<Element>;
  { g.inverse(a) } -> std::convertible_to<Element>;
  { g.name() } -> std::convertible_to<std::string>;
};

template <FiniteGroup G>
void check_element(const G& g, Element x) {
  if (x >= g.order())
    throw InvalidElement("element " + std::to_string(x) + " is not in " + std::string(g.name()));
}

/// All encodings in ascending order; the identity comes first.
template <FiniteGroup G>
std::vector<Element> elements(const G& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return all;
}

template <FiniteGroup G>
Element power(const G& g, Element x, std::uint64_t e) {
  Element result = g.identity();
  while (e > 0) {
    if (e & 1) result = g.multiply(result, x);
    x = g.multiply(x, x);
    e >>= 1;
  }
  return result;
}

/// Smallest m >= 1 with x^m = 1.
template <FiniteGroup G>
std::uint64_t element_order(const G& g, Element x) {
  check_element(g, x);
  std::uint64_t m = 1;
  for (Element y = x; y != g.identity(); y = g.multiply(y, x)) ++m;
  return m;
}

template <FiniteGroup G>
Element commutator(const G& g, Element a, Element b) {
  return g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
}

template <FiniteGroup G>
Element conjugate(const G& g, Element by, Element x) {
  return g.multiply(g.multiply(by, x), g.inverse(by));
}

class AnyGroup {
public:
  template <FiniteGroup G>
    requires(!std::same_as<std::remove_cvref_t<G>, AnyGroup>)
  AnyGroup(G group)  // NOLINT(implicit)
      : impl_(std::make_shared<Model<G>>(std::move(group))) {}

  std::uint64_t order() const { return impl_->order(); }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return impl_->multiply(a, b); }
  Element inverse(Element a) const { return impl_->inverse(a); }
  std::string name() const { return impl_->name(); }

  /// The wrapped group, when it has type G.
  template <FiniteGroup G>
  const G* as() const {
    auto* m = dynamic_cast<const Model<G>*>(impl_.get());
    return m ? &m->group : nullptr;
  }

private:
  struct Concept {
    virtual ~Concept() = default;
    virtual std::uint64_t order() const = 0;
    virtual Element multiply(Element, Element) const = 0;
    virtual Element inverse(Element) const = 0;
    virtual std::string name() const = 0;
  };

  template <typename G>
  struct Model final : Concept {
    explicit Model(G g) : group(std::move(g)) {}
    std::uint64_t order() const override { return group.order(); }
    Element multiply(Element a, Element b) const override { return group.multiply(a, b); }
    Element inverse(Element a) const override { return group.inverse(a); }
    std::string name() const override { return group.name(); }
    G group;
  };

  std::shared_ptr<const Concept> impl_;
};

static_assert(FiniteGroup<AnyGroup>);

}  // namespace relorder
