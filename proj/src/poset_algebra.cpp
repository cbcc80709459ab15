#include <map>
#include <mutex>

#include "cqsym/error.hpp"
#include "cqsym/poset.hpp"

namespace cqsym {

namespace {

void check_colors(int a, int b) {
  if (a != b) throw InvariantError("color-count-mismatch", "operands use different numbers of colors");
}

template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    // std::map nodes are stable, so the returned reference outlives later inserts.
    return cache_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> cache_;
};

Memo<PosetPair, ColoredPoset>& product_memo() {
  static Memo<PosetPair, ColoredPoset> memo;
  return memo;
}

Memo<ColoredPoset, std::vector<PosetPair>>& coproduct_memo() {
  static Memo<ColoredPoset, std::vector<PosetPair>> memo;
  return memo;
}

Memo<ColoredPoset, LinearCombination<ColoredPoset>>& antipode_memo() {
  static Memo<ColoredPoset, LinearCombination<ColoredPoset>> memo;
  return memo;
}

// S(P) for canonical P by S(P) = -P - sum over proper nonempty ideals I of S(I)(P \ I).
const LinearCombination<ColoredPoset>& antipode_inductive(const ColoredPoset& poset) {
  return antipode_memo().get(poset, [&] {
    LinearCombination<ColoredPoset> out;
    if (poset.empty()) {
      out.add(poset, 1);
      return out;
    }
    out.add(poset, -1);
    for (const auto& [lower, upper] : coproduct_basis(poset)) {
      if (lower.empty() || upper.empty()) continue;
      for (const auto& [term, coeff] : antipode_inductive(lower)) out.add(product_basis(term, upper), -coeff);
    }
    return out;
  });
}

// Signed sum over strict ideal chains of the disjoint union of the layers.
LinearCombination<ColoredPoset> antipode_chains(const ColoredPoset& poset) {
  LinearCombination<ColoredPoset> out;
  if (poset.empty()) {
    out.add(poset, 1);
    return out;
  }
  const auto masks = ideal_masks(poset);
  const ElementMask full = poset.full_mask();
  // Layers keep their induced relations and lose those between layers.
  auto recurse = [&](auto&& self, ElementMask reached, std::vector<ElementMask>& layers) -> void {
    if (reached == full) {
      ColoredPoset unioned = poset.restrict(layers.front());
      for (std::size_t k = 1; k < layers.size(); ++k) unioned = disjoint_union(unioned, poset.restrict(layers[k]));
      out.add(canonical_form(unioned), sign_power(layers.size()));
      return;
    }
    for (ElementMask next : masks) {
      if ((next & reached) != reached || next == reached) continue;
      layers.push_back(next & ~reached);
      self(self, next, layers);
      layers.pop_back();
    }
  };
  std::vector<ElementMask> layers;
  recurse(recurse, 0, layers);
  return out;
}

}  // namespace

PosetAlgebraElement::PosetAlgebraElement(int colors) : colors_(colors) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
}

PosetAlgebraElement PosetAlgebraElement::unit(int colors) {
  PosetAlgebraElement out(colors);
  out.terms_.add(ColoredPoset(colors), 1);
  return out;
}

PosetAlgebraElement PosetAlgebraElement::basis(const ColoredPoset& poset, const Rational& coeff) {
  PosetAlgebraElement out(poset.colors());
  out.add(poset, coeff);
  return out;
}

void PosetAlgebraElement::add(const ColoredPoset& poset, const Rational& coeff) {
  check_colors(colors_, poset.colors());
  terms_.add(canonical_form(poset), coeff);
}

void PosetAlgebraElement::add_canonical(const ColoredPoset& poset, const Rational& coeff) {
  check_colors(colors_, poset.colors());
  terms_.add(poset, coeff);
}

Rational PosetAlgebraElement::counit() const { return terms_.coefficient(ColoredPoset(colors_)); }

PosetAlgebraElement& PosetAlgebraElement::operator+=(const PosetAlgebraElement& other) {
  check_colors(colors_, other.colors_);
  terms_ += other.terms_;
  return *this;
}

PosetAlgebraElement& PosetAlgebraElement::operator-=(const PosetAlgebraElement& other) {
  check_colors(colors_, other.colors_);
  terms_ -= other.terms_;
  return *this;
}

PosetAlgebraElement& PosetAlgebraElement::operator*=(const Rational& scale) {
  terms_ *= scale;
  return *this;
}

PosetAlgebraElement operator+(PosetAlgebraElement a, const PosetAlgebraElement& b) { return a += b; }
PosetAlgebraElement operator-(PosetAlgebraElement a, const PosetAlgebraElement& b) { return a -= b; }
PosetAlgebraElement operator*(const Rational& scale, PosetAlgebraElement a) { return a *= scale; }

ColoredPoset product_basis(const ColoredPoset& left, const ColoredPoset& right) {
  check_colors(left.colors(), right.colors());
  if (left.empty()) return right;
  if (right.empty()) return left;
  // The product is commutative, so one cache entry serves both orders.
  PosetPair key = left < right ? PosetPair{left, right} : PosetPair{right, left};
  return product_memo().get(key, [&] { return canonical_form(disjoint_union(key.first, key.second)); });
}

PosetAlgebraElement product(const PosetAlgebraElement& a, const PosetAlgebraElement& b) {
  check_colors(a.colors(), b.colors());
  PosetAlgebraElement out(a.colors());
  for (const auto& [p, pc] : a.terms()) {
    for (const auto& [q, qc] : b.terms()) out.add_canonical(product_basis(p, q), pc * qc);
  }
  return out;
}

const std::vector<PosetPair>& coproduct_basis(const ColoredPoset& canonical) {
  return coproduct_memo().get(canonical, [&] {
    std::vector<PosetPair> out;
    for (const auto& ideal : ideals(canonical)) {
      out.emplace_back(canonical_form(ideal.lower), canonical_form(ideal.upper));
    }
    return out;
  });
}

PosetTensor coproduct(const PosetAlgebraElement& a) {
  PosetTensor out{a.colors(), {}};
  for (const auto& [poset, coeff] : a.terms()) {
    for (const auto& pair : coproduct_basis(poset)) out.terms.add(pair, coeff);
  }
  return out;
}

PosetTensor tensor_product(const PosetTensor& x, const PosetTensor& y) {
  check_colors(x.colors, y.colors);
  PosetTensor out{x.colors, {}};
  for (const auto& [a, ac] : x.terms) {
    for (const auto& [b, bc] : y.terms) {
      out.terms.add(PosetPair{product_basis(a.first, b.first), product_basis(a.second, b.second)}, ac * bc);
    }
  }
  return out;
}

PosetAlgebraElement antipode(const PosetAlgebraElement& a, AntipodeMethod method) {
  PosetAlgebraElement out(a.colors());
  for (const auto& [poset, coeff] : a.terms()) {
    if (method == AntipodeMethod::inductive) {
      for (const auto& [term, c] : antipode_inductive(poset)) out.add_canonical(term, coeff * c);
    } else {
      for (const auto& [term, c] : antipode_chains(poset)) out.add_canonical(term, coeff * c);
    }
  }
  return out;
}

}  // namespace cqsym
