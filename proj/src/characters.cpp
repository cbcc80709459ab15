#include "cqsym/characters.hpp"

#include <charconv>
#include <set>

namespace cqsym {

namespace {

void check_color(int colors, int color) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
  if (color < 0 || color >= colors) {
    throw InvariantError("color-range", "color " + std::to_string(color) + " outside [0, " + std::to_string(colors) + ")");
  }
}

bool colors_strictly_increase(const ColoredComposition& alpha) {
  for (std::size_t i = 1; i < alpha.length(); ++i) {
    if (alpha[i].color <= alpha[i - 1].color) return false;
  }
  return true;
}

Rational power_of_two(std::size_t exponent) {
  Integer value = 1;
  value <<= static_cast<mp_bitcnt_t>(exponent);
  return Rational(value);
}

template <class Algebra>
CharacterTuple<Algebra> nu_tuple(const CharacterTuple<Algebra>& zetas) {
  CharacterTuple<Algebra> out;
  for (const auto& zeta : zetas) out.push_back(nu(zeta));
  return out;
}

template <class Algebra>
Character<Algebra> rename(const Character<Algebra>& phi, std::string name) {
  return Character<Algebra>(phi.colors(), std::move(name), [phi](const typename Algebra::Key& key) { return phi(key); });
}

// "zetaQ:1" -> ("zetaQ", 1); "zetaQ" -> ("zetaQ", -1).
std::pair<std::string, int> split_name(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return {name, -1};
  const std::string digits = name.substr(colon + 1);
  int color = 0;
  const auto [end, error] = std::from_chars(digits.data(), digits.data() + digits.size(), color);
  if (digits.empty() || error != std::errc() || end != digits.data() + digits.size()) {
    throw ParseError("character", "bad color in character name '" + name + "'");
  }
  return {name.substr(0, colon), color};
}

// Psi of one basis key: peel the first graded piece off the coproduct and
// recurse on the rest.
template <class Algebra>
LinearCombination<ColoredComposition> psi_key(const typename Algebra::Key& key,
                                              const CharacterTuple<Algebra>& characters,
                                              std::map<typename Algebra::Key, LinearCombination<ColoredComposition>>& memo) {
  auto found = memo.find(key);
  if (found != memo.end()) return found->second;
  const int colors = static_cast<int>(characters.size());
  LinearCombination<ColoredComposition> out;
  if (Algebra::degree(key) == 0) {
    out.add(ColoredComposition(colors, {}), 1);
  } else {
    for (const auto& term : Algebra::coproduct(key)) {
      const int first = Algebra::degree(term.left);
      if (first == 0) continue;
      LinearCombination<ColoredComposition> rest;
      bool rest_ready = false;
      for (int color = 0; color < colors; ++color) {
        const Rational value = characters[static_cast<std::size_t>(color)](term.left);
        if (value == 0) continue;
        if (!rest_ready) {
          rest = psi_key<Algebra>(term.right, characters, memo);
          rest_ready = true;
        }
        for (const auto& [beta, coeff] : rest) {
          std::vector<ColoredPart> parts{{first, color}};
          parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
          out.add(ColoredComposition(colors, std::move(parts)), term.coeff * value * coeff);
        }
      }
    }
  }
  memo.emplace(key, out);
  return out;
}

template <class Algebra>
QSymElement psi_impl(const typename Algebra::Element& element, const CharacterTuple<Algebra>& characters) {
  if (characters.size() != static_cast<std::size_t>(element.colors())) {
    throw InvariantError("character-count", "expected " + std::to_string(element.colors()) + " characters, got " +
                                                std::to_string(characters.size()));
  }
  for (const auto& phi : characters) {
    if (phi.colors() != element.colors()) throw InvariantError("character-domain", "character over a different algebra");
  }
  std::map<typename Algebra::Key, LinearCombination<ColoredComposition>> memo;
  QSymElement out(element.colors(), Basis::M);
  for (const auto& [key, coeff] : Algebra::expand(element)) {
    for (const auto& [alpha, value] : psi_key<Algebra>(key, characters, memo)) out.add(alpha, coeff * value);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra adapters

std::vector<PosetHopf::Term> PosetHopf::coproduct(const Key& key) {
  std::vector<Term> out;
  for (const auto& [lower, upper] : coproduct_basis(key)) out.push_back({lower, upper, 1});
  return out;
}

LinearCombination<ColoredPoset> PosetHopf::antipode(const Key& key) {
  return cqsym::antipode(PosetAlgebraElement::basis(key)).terms();
}

std::vector<QSymHopf::Term> QSymHopf::coproduct(const Key& key) {
  std::vector<Term> out;
  const auto delta = cqsym::coproduct(QSymElement::basis_element(key.basis, key.alpha));
  for (const auto& [pair, coeff] : delta.terms) {
    out.push_back({{key.basis, pair.first}, {key.basis, pair.second}, coeff});
  }
  return out;
}

LinearCombination<QSymKey> QSymHopf::antipode(const Key& key) {
  LinearCombination<QSymKey> out;
  const auto image = cqsym::antipode(QSymElement::basis_element(key.basis, key.alpha));
  for (const auto& [alpha, coeff] : image.terms()) {
    out.add({key.basis, alpha}, coeff);
  }
  return out;
}

LinearCombination<QSymKey> QSymHopf::expand(const Element& element) {
  LinearCombination<QSymKey> out;
  for (const auto& [alpha, coeff] : element.terms()) out.add({element.basis(), alpha}, coeff);
  return out;
}

// ---------------------------------------------------------------------------
// Built-ins

QSymCharacter zeta_q(int colors, int color) {
  check_color(colors, color);
  return QSymCharacter(colors, "zetaQ:" + std::to_string(color), [color](const QSymKey& key) {
    const auto& alpha = key.alpha;
    if (alpha.empty()) return Rational(1);
    if (alpha.length() != 1 || alpha[0].color != color) return Rational(0);
    return Rational(key.basis == Basis::K ? 2 : 1);
  });
}

PosetCharacter zeta_p(int colors, int color) {
  check_color(colors, color);
  return PosetCharacter(colors, "zetaP:" + std::to_string(color), [color](const ColoredPoset& poset) {
    return Rational(is_monochromatic(poset, color) && is_naturally_labeled(poset) ? 1 : 0);
  });
}

QSymCharacter zeta_q_product(int colors) {
  check_color(colors, 0);
  return QSymCharacter(colors, "zetaQ", [](const QSymKey& key) {
    if (!colors_strictly_increase(key.alpha)) return Rational(0);
    return key.basis == Basis::K ? power_of_two(key.alpha.length()) : Rational(1);
  });
}

PosetCharacter zeta_p_product(int colors) {
  check_color(colors, 0);
  return PosetCharacter(colors, "zetaP",
                        [](const ColoredPoset& poset) { return Rational(is_naturally_labeled(poset) ? 1 : 0); });
}

CharacterTuple<QSymHopf> zeta_q_tuple(int colors) {
  CharacterTuple<QSymHopf> out;
  for (int j = 0; j < colors; ++j) out.push_back(zeta_q(colors, j));
  return out;
}

CharacterTuple<PosetHopf> zeta_p_tuple(int colors) {
  CharacterTuple<PosetHopf> out;
  for (int j = 0; j < colors; ++j) out.push_back(zeta_p(colors, j));
  return out;
}

CharacterTuple<PosetHopf> nu_p_tuple(int colors) {
  auto out = nu_tuple(zeta_p_tuple(colors));
  for (int j = 0; j < colors; ++j) out[static_cast<std::size_t>(j)] = rename(out[static_cast<std::size_t>(j)], "nuP:" + std::to_string(j));
  return out;
}

PosetCharacter nu_p_product(int colors) { return rename(convolve_all(nu_p_tuple(colors), colors), "nuP"); }

CharacterTuple<QSymHopf> nu_q_tuple(int colors) {
  auto out = nu_tuple(zeta_q_tuple(colors));
  for (int j = 0; j < colors; ++j) out[static_cast<std::size_t>(j)] = rename(out[static_cast<std::size_t>(j)], "nuQ:" + std::to_string(j));
  return out;
}

QSymCharacter nu_q_product(int colors) { return rename(convolve_all(nu_q_tuple(colors), colors), "nuQ"); }

Rational count_nu_p(const ColoredPoset& poset, int color) {
  check_color(poset.colors(), color);
  if (poset.empty()) return 1;
  if (!is_monochromatic(poset, color)) return 0;
  Integer count = 0;
  for (const auto& pi : linear_extensions(poset)) {
    if (peak_set(pi).empty()) ++count;
  }
  return Rational(2 * count);
}

Rational count_nu_p_product(const ColoredPoset& poset) {
  if (poset.empty()) return 1;
  Integer count = 0;
  for (const auto& pi : linear_extensions(poset)) {
    bool weakly_increasing = true;
    for (std::size_t i = 1; i < pi.size() && weakly_increasing; ++i) {
      weakly_increasing = pi[i - 1].color <= pi[i].color;
    }
    if (weakly_increasing && peak_set(pi).empty()) ++count;
  }
  std::set<int> distinct;
  for (const auto& e : poset.elements()) distinct.insert(e.color);
  return power_of_two(distinct.size()) * Rational(count);
}

QSymCharacter qsym_character(const std::string& name, int colors) {
  const auto [base, color] = split_name(name);
  if (base == "counit" && color < 0) return counit_character<QSymHopf>(colors);
  if (base == "zetaQ") return color < 0 ? zeta_q_product(colors) : zeta_q(colors, color);
  if (base == "nuQ") {
    if (color < 0) return nu_q_product(colors);
    check_color(colors, color);
    return nu_q_tuple(colors)[static_cast<std::size_t>(color)];
  }
  throw ParseError("character", "unknown qsym character '" + name + "'");
}

PosetCharacter poset_character(const std::string& name, int colors) {
  const auto [base, color] = split_name(name);
  if (base == "counit" && color < 0) return counit_character<PosetHopf>(colors);
  if (base == "zetaP") return color < 0 ? zeta_p_product(colors) : zeta_p(colors, color);
  if (base == "nuP") {
    if (color < 0) return nu_p_product(colors);
    check_color(colors, color);
    return nu_p_tuple(colors)[static_cast<std::size_t>(color)];
  }
  throw ParseError("character", "unknown poset character '" + name + "'");
}

QSymElement psi(const PosetAlgebraElement& element, const CharacterTuple<PosetHopf>& characters) {
  return psi_impl<PosetHopf>(element, characters);
}

QSymElement psi(const QSymElement& element, const CharacterTuple<QSymHopf>& characters) {
  return psi_impl<QSymHopf>(element, characters);
}

}  // namespace cqsym
