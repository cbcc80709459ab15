#include <gtest/gtest.h>

#include "cqsym/error.hpp"
#include "cqsym/json_io.hpp"
#include "support.hpp"

namespace cqsym {
namespace {

using json_io::Json;
using testing::comp;

TEST(JsonIo, Rationals) {
  EXPECT_EQ(json_io::read_rational(Json(3), ""), 3);
  EXPECT_EQ(json_io::read_rational(Json("-3/6"), ""), Rational(-1, 2));
  EXPECT_EQ(json_io::write_rational(ratio(4, 6)), Json("2/3"));
  EXPECT_THROW(json_io::read_rational(Json(1.5), ""), ParseError);
  EXPECT_THROW(json_io::read_rational(Json("1/0"), ""), ParseError);
}

TEST(JsonIo, ElementsRoundTrip) {
  testing::Generator gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = gen.uniform(1, 3);
    QSymElement x(m, Basis::F);
    for (int t = 0; t < 3; ++t) x.add(gen.composition(m, gen.uniform(0, 4)), ratio(gen.uniform(-4, 4), gen.uniform(1, 3)));
    const auto back = json_io::read_element(json_io::write_element(x), "");
    EXPECT_EQ(back.basis(), x.basis());
    EXPECT_EQ(back.terms(), x.terms());

    const auto p = gen.poset(m, gen.uniform(0, 5), 0.4, 9);
    EXPECT_EQ(json_io::read_poset(json_io::write_poset(p), ""), p);
    const auto pi = gen.permutation(m, gen.uniform(0, 5), 9);
    EXPECT_EQ(json_io::read_permutation(json_io::write_permutation(pi), m, ""), pi);
  }
}

TEST(JsonIo, PolynomialCoefficients) {
  TruncatedPolynomial p(2, 2);
  p.add(p.monomial({{1, 1, 2}, {2, 0, 1}}), 3);
  p.add(p.monomial({{2, 1, 1}}), Rational(1, 2));
  const auto j = json_io::write_polynomial(p);
  EXPECT_EQ(j["N"], 2);
  EXPECT_EQ(json_io::read_polynomial(j, ""), p);
  bool saw_integer = false;
  for (const auto& term : j["terms"]) saw_integer = saw_integer || term["coeff"].is_number_integer();
  EXPECT_TRUE(saw_integer);
}

TEST(JsonIo, ErrorLocations) {
  auto location = [](const Json& value) {
    try {
      json_io::read_element(value, "");
    } catch (const ParseError& e) {
      return e.location();
    }
    return std::string("none");
  };
  EXPECT_EQ(location(Json::parse(R"({"basis":"M","terms":[]})")), "/m");
  EXPECT_EQ(location(Json::parse(R"({"m":1,"basis":"M","terms":{}})")), "/terms");
  EXPECT_EQ(location(Json::parse(R"({"m":1,"basis":"M","terms":[{"coeff":"x","comp":[]}]})")), "/terms/0/coeff");
  EXPECT_EQ(location(Json::parse(R"({"m":1,"basis":"M","terms":[{"coeff":1,"comp":[[1,0],[2]]}]})")),
            "/terms/0/comp/1");
  EXPECT_THROW(json_io::read_element(Json::parse(R"({"m":1,"basis":"M","terms":[{"coeff":1,"comp":[[1,1]]}]})"), ""),
               InvariantError);
  EXPECT_THROW(json_io::read_element(Json::parse(R"({"m":0,"basis":"M","terms":[]})"), ""), InvariantError);
}

TEST(JsonIo, PeakKeysInTensors) {
  const auto bad = Json::parse(R"({"m":1,"basis":"K","terms":[{"coeff":1,"comps":[[[1,0],[2,0]],[]]}]})");
  EXPECT_THROW(json_io::read_tensor(bad, ""), InvariantError);
  QSymTensor t{1, Basis::K, {}};
  t.terms.add({comp(1, {{2, 0}, {1, 0}}), comp(1, {})}, 2);
  EXPECT_EQ(json_io::read_tensor(json_io::write_tensor(t), "").terms, t.terms);
}

}  // namespace
}  // namespace cqsym
