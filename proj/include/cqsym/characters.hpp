#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cqsym/error.hpp"
#include "cqsym/poset.hpp"
#include "cqsym/qsym.hpp"

namespace cqsym {

/// The colored poset algebra seen through its canonical basis.
struct PosetHopf {
  using Key = ColoredPoset;
  using Element = PosetAlgebraElement;
  struct Term {
    Key left;
    Key right;
    Rational coeff;
  };

  static constexpr const char* name = "posets";
  static int degree(const Key& key) { return static_cast<int>(key.size()); }
  static Key unit_key(int colors) { return ColoredPoset(colors); }
  static std::vector<Term> coproduct(const Key& key);
  static LinearCombination<Key> antipode(const Key& key);
  static LinearCombination<Key> expand(const Element& element) { return element.terms(); }
};

/// Basis-tagged composition: M_alpha, F_alpha or K_alpha.
struct QSymKey {
  Basis basis = Basis::M;
  ColoredComposition alpha;
  auto operator<=>(const QSymKey&) const = default;
};

/// Colored quasisymmetric functions; every basis is a basis of keys.
struct QSymHopf {
  using Key = QSymKey;
  using Element = QSymElement;
  struct Term {
    Key left;
    Key right;
    Rational coeff;
  };

  static constexpr const char* name = "qsym";
  static int degree(const Key& key) { return key.alpha.weight(); }
  static Key unit_key(int colors) { return {Basis::M, ColoredComposition(colors, {})}; }
  static std::vector<Term> coproduct(const Key& key);
  static LinearCombination<Key> antipode(const Key& key);
  static LinearCombination<Key> expand(const Element& element);
};

/// A multiplicative functional into the rationals.
///
/// Values are computed from `rule` on demand, one basis key at a time, and
/// cached. Copies share the cache, which is filled under a lock; rules are
/// deterministic so a repeated fill stores the same value.
template <class Algebra>
class Character {
 public:
  using Key = typename Algebra::Key;
  using Element = typename Algebra::Element;
  using Rule = std::function<Rational(const Key&)>;

  Character(int colors, std::string name, Rule rule)
      : state_(std::make_shared<State>(colors, std::move(name), std::move(rule))) {}

  int colors() const noexcept { return state_->colors; }
  const std::string& name() const noexcept { return state_->name; }

  Rational operator()(const Key& key) const {
    {
      std::lock_guard lock(state_->mutex);
      auto it = state_->values.find(key);
      if (it != state_->values.end()) return it->second;
    }
    Rational value = state_->rule(key);
    std::lock_guard lock(state_->mutex);
    state_->values.emplace(key, value);
    return value;
  }

  Rational operator()(const Element& element) const {
    if (element.colors() != colors()) throw InvariantError("character-domain", "element and character differ in colors");
    Rational total = 0;
    for (const auto& [key, coeff] : Algebra::expand(element)) total += coeff * (*this)(key);
    return total;
  }

 private:
  struct State {
    State(int c, std::string n, Rule r) : colors(c), name(std::move(n)), rule(std::move(r)) {}
    int colors;
    std::string name;
    Rule rule;
    std::mutex mutex;
    std::map<Key, Rational> values;
  };
  std::shared_ptr<State> state_;
};

using PosetCharacter = Character<PosetHopf>;
using QSymCharacter = Character<QSymHopf>;

/// One character per color, in color order.
template <class Algebra>
using CharacterTuple = std::vector<Character<Algebra>>;

// ---------------------------------------------------------------------------
// Group structure

/// The counit: 1 on the unit key, 0 in positive degree.
template <class Algebra>
Character<Algebra> counit_character(int colors) {
  return Character<Algebra>(colors, "counit", [](const typename Algebra::Key& key) {
    return Rational(Algebra::degree(key) == 0 ? 1 : 0);
  });
}

/// (left right)(h) = sum of left(h1) right(h2) over the coproduct of h.
template <class Algebra>
Character<Algebra> convolve(const Character<Algebra>& left, const Character<Algebra>& right) {
  if (left.colors() != right.colors()) throw InvariantError("character-domain", "convolving characters of different algebras");
  return Character<Algebra>(left.colors(), left.name() + "*" + right.name(),
                            [left, right](const typename Algebra::Key& key) {
                              Rational total = 0;
                              for (const auto& term : Algebra::coproduct(key)) {
                                const Rational first = left(term.left);
                                if (first == 0) continue;
                                total += term.coeff * first * right(term.right);
                              }
                              return total;
                            });
}

/// Convolution of the whole tuple, first factor leftmost.
template <class Algebra>
Character<Algebra> convolve_all(const CharacterTuple<Algebra>& factors, int colors) {
  if (factors.empty()) return counit_character<Algebra>(colors);
  Character<Algebra> product = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) product = convolve(product, factors[i]);
  return product;
}

/// phi composed with the antipode.
template <class Algebra>
Character<Algebra> inverse(const Character<Algebra>& phi) {
  return Character<Algebra>(phi.colors(), "inv(" + phi.name() + ")", [phi](const typename Algebra::Key& key) {
    Rational total = 0;
    for (const auto& [image, coeff] : Algebra::antipode(key)) total += coeff * phi(image);
    return total;
  });
}

/// (-1)^n phi in degree n.
template <class Algebra>
Character<Algebra> bar(const Character<Algebra>& phi) {
  return Character<Algebra>(phi.colors(), "bar(" + phi.name() + ")", [phi](const typename Algebra::Key& key) {
    const Rational value = phi(key);
    return Algebra::degree(key) % 2 == 0 ? value : Rational(-value);
  });
}

/// bar(phi)^{-1} phi, an odd character.
template <class Algebra>
Character<Algebra> nu(const Character<Algebra>& phi) {
  Character<Algebra> odd = convolve(inverse(bar(phi)), phi);
  return Character<Algebra>(phi.colors(), "nu(" + phi.name() + ")", [odd](const typename Algebra::Key& key) {
    return odd(key);
  });
}

// ---------------------------------------------------------------------------
// Built-in characters

/// Sends x_{1,color} to 1 and every other variable to 0.
QSymCharacter zeta_q(int colors, int color);
/// 1 on color-monochromatic, naturally labeled posets.
PosetCharacter zeta_p(int colors, int color);

/// Closed form of zeta_q(0) zeta_q(1) ... zeta_q(m-1).
QSymCharacter zeta_q_product(int colors);
/// Closed form of zeta_p(0) zeta_p(1) ... zeta_p(m-1): 1 on naturally
/// labeled posets.
PosetCharacter zeta_p_product(int colors);

CharacterTuple<QSymHopf> zeta_q_tuple(int colors);
CharacterTuple<PosetHopf> zeta_p_tuple(int colors);

/// nu of each zeta_p(j), and their convolution in color order.
CharacterTuple<PosetHopf> nu_p_tuple(int colors);
PosetCharacter nu_p_product(int colors);
CharacterTuple<QSymHopf> nu_q_tuple(int colors);
QSymCharacter nu_q_product(int colors);

/// 2 * #{peak-free extensions of color `color` throughout}; 1 on the empty
/// poset.
Rational count_nu_p(const ColoredPoset& poset, int color);
/// 2^k * #{peak-free extensions with weakly increasing colors}, k the
/// number of distinct colors; 1 on the empty poset.
Rational count_nu_p_product(const ColoredPoset& poset);

/// Built-in by name: zetaQ:j, zetaQ, nuQ:j, nuQ, counit.
QSymCharacter qsym_character(const std::string& name, int colors);
/// Built-in by name: zetaP:j, zetaP, nuP:j, nuP, counit.
PosetCharacter poset_character(const std::string& name, int colors);

// ---------------------------------------------------------------------------
// The universal morphism

/// Sum over colored compositions alpha of phi_alpha(h) M_alpha, where
/// phi_alpha applies the tuple's characters to the graded pieces of the
/// iterated coproduct. The tuple must hold one character per color.
QSymElement psi(const PosetAlgebraElement& element, const CharacterTuple<PosetHopf>& characters);
QSymElement psi(const QSymElement& element, const CharacterTuple<QSymHopf>& characters);

}  // namespace cqsym
