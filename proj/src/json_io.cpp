#include "cqsym/json_io.hpp"

#include <limits>

#include "cqsym/error.hpp"

namespace cqsym::json_io {

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t index) { return at + "/" + std::to_string(index); }

const Json& array_at(const Json& value, const std::string& at) {
  if (!value.is_array()) throw ParseError(at, "expected an array");
  return value;
}

void require_object(const Json& value, const std::string& at) {
  if (!value.is_object()) throw ParseError(at, "expected an object");
}

// [a, b] with integer entries.
std::pair<int, int> read_pair(const Json& value, const std::string& at) {
  if (!value.is_array() || value.size() != 2) throw ParseError(at, "expected a pair [a, b]");
  return {read_int(value[0], child(at, std::size_t{0})), read_int(value[1], child(at, std::size_t{1}))};
}

Basis read_basis(const Json& object, const std::string& at) {
  const auto& value = member(object, "basis", at);
  if (!value.is_string()) throw ParseError(child(at, "basis"), "expected \"M\", \"F\" or \"K\"");
  try {
    return parse_basis(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(child(at, "basis"), e.what());
  }
}

}  // namespace

const Json& member(const Json& object, const std::string& key, const std::string& at) {
  require_object(object, at);
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(child(at, key), "missing member \"" + key + "\"");
  return *it;
}

int read_int(const Json& value, const std::string& at) {
  if (!value.is_number_integer()) throw ParseError(at, "expected an integer");
  const auto wide = value.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
    throw ParseError(at, "integer out of range");
  }
  return static_cast<int>(wide);
}

Rational read_rational(const Json& value, const std::string& at) {
  if (value.is_number_integer()) return Rational(Integer(value.dump()));
  if (!value.is_string()) throw ParseError(at, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(at, e.what());
  }
}

int read_colors(const Json& object, const std::string& at) {
  const int colors = read_int(member(object, "m", at), child(at, "m"));
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
  return colors;
}

Json write_rational(const Rational& value) { return to_string(value); }

Json write_composition(const ColoredComposition& alpha) {
  Json out = Json::array();
  for (const auto& part : alpha.parts()) out.push_back({part.size, part.color});
  return out;
}

ColoredComposition read_composition(const Json& value, int colors, const std::string& at) {
  std::vector<ColoredPart> parts;
  for (std::size_t i = 0; i < array_at(value, at).size(); ++i) {
    const auto [size, color] = read_pair(value[i], child(at, i));
    parts.push_back({size, color});
  }
  return ColoredComposition(colors, std::move(parts));
}

Json write_permutation(const ColoredPermutation& pi) {
  Json out = Json::array();
  for (const auto& letter : pi.letters()) out.push_back({letter.value, letter.color});
  return out;
}

ColoredPermutation read_permutation(const Json& value, int colors, const std::string& at) {
  std::vector<ColoredLetter> letters;
  for (std::size_t i = 0; i < array_at(value, at).size(); ++i) {
    const auto [v, color] = read_pair(value[i], child(at, i));
    letters.push_back({v, color});
  }
  return ColoredPermutation(colors, std::move(letters));
}

Json write_poset_body(const ColoredPoset& poset) {
  Json elements = Json::array();
  for (const auto& e : poset.elements()) elements.push_back({e.value, e.color});
  Json covers = Json::array();
  for (const auto& [a, b] : poset.covers()) covers.push_back({a, b});
  return {{"elements", elements}, {"covers", covers}};
}

Json write_poset(const ColoredPoset& poset) {
  Json out = write_poset_body(poset);
  out["m"] = poset.colors();
  return out;
}

ColoredPoset read_poset_body(const Json& value, int colors, const std::string& at) {
  const auto& elements_json = member(value, "elements", at);
  std::vector<ColoredLetter> elements;
  for (std::size_t i = 0; i < array_at(elements_json, child(at, "elements")).size(); ++i) {
    const auto [v, color] = read_pair(elements_json[i], child(child(at, "elements"), i));
    elements.push_back({v, color});
  }
  std::vector<std::pair<int, int>> relations;
  if (value.contains("covers")) {
    const auto& covers = value["covers"];
    for (std::size_t i = 0; i < array_at(covers, child(at, "covers")).size(); ++i) {
      relations.push_back(read_pair(covers[i], child(child(at, "covers"), i)));
    }
  }
  return ColoredPoset(colors, std::move(elements), relations);
}

ColoredPoset read_poset(const Json& value, const std::string& at) {
  return read_poset_body(value, read_colors(value, at), at);
}

Json write_element(const QSymElement& element) {
  Json terms = Json::array();
  for (const auto& [alpha, coeff] : element.terms()) {
    terms.push_back({{"coeff", write_rational(coeff)}, {"comp", write_composition(alpha)}});
  }
  return {{"m", element.colors()}, {"basis", to_string(element.basis())}, {"terms", terms}};
}

QSymElement read_element(const Json& value, const std::string& at) {
  const int colors = read_colors(value, at);
  QSymElement out(colors, read_basis(value, at));
  const auto& terms = member(value, "terms", at);
  for (std::size_t i = 0; i < array_at(terms, child(at, "terms")).size(); ++i) {
    const auto here = child(child(at, "terms"), i);
    const auto coeff = read_rational(member(terms[i], "coeff", here), child(here, "coeff"));
    out.add(read_composition(member(terms[i], "comp", here), colors, child(here, "comp")), coeff);
  }
  return out;
}

Json write_tensor(const QSymTensor& tensor) {
  Json terms = Json::array();
  for (const auto& [pair, coeff] : tensor.terms) {
    terms.push_back({{"coeff", write_rational(coeff)},
                     {"comps", {write_composition(pair.first), write_composition(pair.second)}}});
  }
  return {{"m", tensor.colors}, {"basis", to_string(tensor.basis)}, {"terms", terms}};
}

QSymTensor read_tensor(const Json& value, const std::string& at) {
  QSymTensor out;
  out.colors = read_colors(value, at);
  out.basis = read_basis(value, at);
  const auto& terms = member(value, "terms", at);
  for (std::size_t i = 0; i < array_at(terms, child(at, "terms")).size(); ++i) {
    const auto here = child(child(at, "terms"), i);
    const auto coeff = read_rational(member(terms[i], "coeff", here), child(here, "coeff"));
    const auto& comps = member(terms[i], "comps", here);
    if (!comps.is_array() || comps.size() != 2) throw ParseError(child(here, "comps"), "expected two compositions");
    auto left = read_composition(comps[0], out.colors, child(child(here, "comps"), std::size_t{0}));
    auto right = read_composition(comps[1], out.colors, child(child(here, "comps"), std::size_t{1}));
    if (out.basis == Basis::K && !(is_peak_composition(left) && is_peak_composition(right))) {
      throw InvariantError("peak-composition", "K keys must be peak compositions");
    }
    out.terms.add({std::move(left), std::move(right)}, coeff);
  }
  return out;
}

Json write_poset_element(const PosetAlgebraElement& element) {
  Json terms = Json::array();
  for (const auto& [poset, coeff] : element.terms()) {
    terms.push_back({{"coeff", write_rational(coeff)}, {"poset", write_poset_body(poset)}});
  }
  return {{"m", element.colors()}, {"terms", terms}};
}

PosetAlgebraElement read_poset_element(const Json& value, const std::string& at) {
  const int colors = read_colors(value, at);
  PosetAlgebraElement out(colors);
  const auto& terms = member(value, "terms", at);
  for (std::size_t i = 0; i < array_at(terms, child(at, "terms")).size(); ++i) {
    const auto here = child(child(at, "terms"), i);
    const auto coeff = read_rational(member(terms[i], "coeff", here), child(here, "coeff"));
    out.add(read_poset_body(member(terms[i], "poset", here), colors, child(here, "poset")), coeff);
  }
  return out;
}

Json write_poset_tensor(const PosetTensor& tensor) {
  Json terms = Json::array();
  for (const auto& [pair, coeff] : tensor.terms) {
    terms.push_back({{"coeff", write_rational(coeff)},
                     {"posets", {write_poset_body(pair.first), write_poset_body(pair.second)}}});
  }
  return {{"m", tensor.colors}, {"terms", terms}};
}

PosetTensor read_poset_tensor(const Json& value, const std::string& at) {
  PosetTensor out;
  out.colors = read_colors(value, at);
  const auto& terms = member(value, "terms", at);
  for (std::size_t i = 0; i < array_at(terms, child(at, "terms")).size(); ++i) {
    const auto here = child(child(at, "terms"), i);
    const auto coeff = read_rational(member(terms[i], "coeff", here), child(here, "coeff"));
    const auto& posets = member(terms[i], "posets", here);
    if (!posets.is_array() || posets.size() != 2) throw ParseError(child(here, "posets"), "expected two posets");
    auto left = canonical_form(read_poset_body(posets[0], out.colors, child(child(here, "posets"), std::size_t{0})));
    auto right = canonical_form(read_poset_body(posets[1], out.colors, child(child(here, "posets"), std::size_t{1})));
    out.terms.add({std::move(left), std::move(right)}, coeff);
  }
  return out;
}

Json write_polynomial(const TruncatedPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [exponents, coeff] : p.terms()) {
    Json exps = Json::array();
    for (const auto& power : p.powers(exponents)) exps.push_back({power.index, power.color, power.exponent});
    Json c;
    if (coeff.get_den() == 1 && coeff.get_num().fits_slong_p()) {
      c = static_cast<std::int64_t>(coeff.get_num().get_si());
    } else {
      c = write_rational(coeff);
    }
    terms.push_back({{"exps", exps}, {"coeff", c}});
  }
  return {{"N", p.alphabet_size()}, {"m", p.colors()}, {"terms", terms}};
}

TruncatedPolynomial read_polynomial(const Json& value, const std::string& at) {
  const int colors = read_colors(value, at);
  TruncatedPolynomial out(read_int(member(value, "N", at), child(at, "N")), colors);
  const auto& terms = member(value, "terms", at);
  for (std::size_t i = 0; i < array_at(terms, child(at, "terms")).size(); ++i) {
    const auto here = child(child(at, "terms"), i);
    const auto coeff = read_rational(member(terms[i], "coeff", here), child(here, "coeff"));
    const auto& exps = member(terms[i], "exps", here);
    std::vector<VariablePower> powers;
    for (std::size_t k = 0; k < array_at(exps, child(here, "exps")).size(); ++k) {
      const auto where = child(child(here, "exps"), k);
      if (!exps[k].is_array() || exps[k].size() != 3) throw ParseError(where, "expected [i, j, e]");
      powers.push_back({read_int(exps[k][0], where + "/0"), read_int(exps[k][1], where + "/1"),
                        read_int(exps[k][2], where + "/2")});
    }
    out.add(out.monomial(powers), coeff);
  }
  return out;
}

}  // namespace cqsym::json_io
