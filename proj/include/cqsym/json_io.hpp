#pragma once

#include <string>

#include <json.hpp>

#include "cqsym/combinat.hpp"
#include "cqsym/oracle.hpp"
#include "cqsym/poset.hpp"
#include "cqsym/qsym.hpp"

namespace cqsym::json_io {

using Json = nlohmann::json;

// Readers report malformed shapes as ParseError whose location is a JSON
// pointer into the payload ("/terms/2/comp"). Well-formed input that breaks
// a domain rule surfaces as the domain's InvariantError.

/// Required member `key` of an object.
const Json& member(const Json& object, const std::string& key, const std::string& at);
int read_int(const Json& value, const std::string& at);
/// Integer or "p/q" string.
Rational read_rational(const Json& value, const std::string& at);
/// "m" member, at least 1.
int read_colors(const Json& object, const std::string& at);

Json write_rational(const Rational& value);

// [[size, color], ...]; m is carried alongside.
Json write_composition(const ColoredComposition& alpha);
ColoredComposition read_composition(const Json& value, int colors, const std::string& at);

// [[value, color], ...]
Json write_permutation(const ColoredPermutation& pi);
ColoredPermutation read_permutation(const Json& value, int colors, const std::string& at);

// {"m": 2, "elements": [[1,0],[5,0],[4,1]], "covers": [[5,1],[5,4]]}
Json write_poset(const ColoredPoset& poset);
ColoredPoset read_poset(const Json& value, const std::string& at);
/// Without "m": the colors come from an enclosing object.
Json write_poset_body(const ColoredPoset& poset);
ColoredPoset read_poset_body(const Json& value, int colors, const std::string& at);

// {"m": 2, "basis": "F", "terms": [{"coeff": "1", "comp": [[1,0],[2,1]]}]}
Json write_element(const QSymElement& element);
QSymElement read_element(const Json& value, const std::string& at);

// {"m": 2, "basis": "M", "terms": [{"coeff": "1", "comps": [[...], [...]]}]}
Json write_tensor(const QSymTensor& tensor);
QSymTensor read_tensor(const Json& value, const std::string& at);

// {"m": 2, "terms": [{"coeff": "1", "poset": {"elements": ..., "covers": ...}}]}
Json write_poset_element(const PosetAlgebraElement& element);
PosetAlgebraElement read_poset_element(const Json& value, const std::string& at);

// {"m": 2, "terms": [{"coeff": "1", "posets": [{...}, {...}]}]}
Json write_poset_tensor(const PosetTensor& tensor);
PosetTensor read_poset_tensor(const Json& value, const std::string& at);

// {"N": 2, "m": 2, "terms": [{"exps": [[i, j, e], ...], "coeff": 3}]}
Json write_polynomial(const TruncatedPolynomial& p);
TruncatedPolynomial read_polynomial(const Json& value, const std::string& at);

}  // namespace cqsym::json_io
