#include <gtest/gtest.h>

#include "cqsym/error.hpp"
#include "cqsym/qsym.hpp"
#include "qsym_oracle.hpp"
#include "support.hpp"

namespace cqsym {
namespace {

using testing::comp;

QSymElement M(const ColoredComposition& alpha, const Rational& c = 1) {
  return QSymElement::basis_element(Basis::M, alpha, c);
}
QSymElement F(const ColoredComposition& alpha, const Rational& c = 1) {
  return QSymElement::basis_element(Basis::F, alpha, c);
}
QSymElement K(const ColoredComposition& alpha, const Rational& c = 1) {
  return QSymElement::basis_element(Basis::K, alpha, c);
}

std::vector<ColoredComposition> compositions_up_to(int colors, int max_n) {
  std::vector<ColoredComposition> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& alpha : enumerate_compositions(colors, n)) out.push_back(alpha);
  }
  return out;
}

// Structural equality: same basis, same stored terms.
void expect_same_terms(const QSymElement& got, const QSymElement& expected) {
  EXPECT_EQ(got.basis(), expected.basis());
  EXPECT_EQ(got.terms(), expected.terms()) << got << "  vs  " << expected;
}

TEST(BasisChange, FundamentalToMonomialExamples) {
  expect_same_terms(f_to_m(F(comp(1, {{2, 0}, {1, 0}}))),
                    M(comp(1, {{2, 0}, {1, 0}})) + M(comp(1, {{1, 0}, {1, 0}, {1, 0}})));
  expect_same_terms(f_to_m(F(comp(2, {{1, 0}, {2, 1}, {1, 1}}))),
                    M(comp(2, {{1, 0}, {2, 1}, {1, 1}})) + M(comp(2, {{1, 0}, {1, 1}, {1, 1}, {1, 1}})));
  expect_same_terms(f_to_m(F(comp(3, {{2, 0}, {1, 2}, {2, 1}}))),
                    M(comp(3, {{2, 0}, {1, 2}, {2, 1}})) + M(comp(3, {{1, 0}, {1, 0}, {1, 2}, {2, 1}})) +
                        M(comp(3, {{2, 0}, {1, 2}, {1, 1}, {1, 1}})) +
                        M(comp(3, {{1, 0}, {1, 0}, {1, 2}, {1, 1}, {1, 1}})));
}

TEST(BasisChange, MonomialToFundamentalExamples) {
  expect_same_terms(m_to_f(M(comp(1, {{2, 0}, {1, 0}}))),
                    F(comp(1, {{2, 0}, {1, 0}})) - F(comp(1, {{1, 0}, {1, 0}, {1, 0}})));
  expect_same_terms(m_to_f(M(comp(2, {}))), F(comp(2, {})));
  expect_same_terms(m_to_f(M(comp(2, {{1, 0}, {1, 1}}))), F(comp(2, {{1, 0}, {1, 1}})));
}

TEST(BasisChange, RoundTripsOnRandomElements) {
  testing::Generator gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = gen.uniform(1, 3);
    QSymElement x(m, Basis::M);
    for (int t = 0; t < 4; ++t) x.add(gen.composition(m, gen.uniform(0, 5)), ratio(gen.uniform(-5, 5), gen.uniform(1, 3)));
    expect_same_terms(f_to_m(m_to_f(x)), x);
    QSymElement y(m, Basis::F);
    for (const auto& [alpha, c] : x.terms()) y.add(alpha, c);
    expect_same_terms(m_to_f(f_to_m(y)), y);
  }
}

TEST(BasisChange, PeakExpansionExamples) {
  expect_same_terms(k_to_m(comp(2, {{2, 0}, {1, 0}, {1, 1}})),
                    M(comp(2, {{2, 0}, {1, 0}, {1, 1}}), 8) + M(comp(2, {{1, 0}, {2, 0}, {1, 1}}), 8) +
                        M(comp(2, {{1, 0}, {1, 0}, {1, 0}, {1, 1}}), 16));
  expect_same_terms(k_to_m(comp(1, {{1, 0}})), M(comp(1, {{1, 0}}), 2));
  expect_same_terms(k_to_m(comp(1, {})), M(comp(1, {})));
}

TEST(BasisChange, PeakKeysOnly) {
  EXPECT_THROW(K(comp(1, {{1, 0}, {2, 0}})), InvariantError);
  EXPECT_NO_THROW(K(comp(2, {{1, 1}, {1, 0}})));
  EXPECT_THROW(to_basis(M(comp(1, {{1, 0}, {1, 0}})), Basis::K), InvariantError);
  const auto x = K(comp(2, {{2, 0}, {1, 0}, {1, 1}}), 3) - K(comp(2, {{3, 1}}));
  expect_same_terms(to_basis(to_m(x), Basis::K), x);
}

TEST(BasisChange, EqualityComparesMonomialExpansions) {
  const auto f = F(comp(1, {{2, 0}, {1, 0}}));
  EXPECT_EQ(f, f_to_m(f));
  EXPECT_NE(f, M(comp(1, {{2, 0}, {1, 0}})));
  EXPECT_EQ(K(comp(1, {{1, 0}})), M(comp(1, {{1, 0}}), 2));
}

TEST(PeakSpan, RankMatchesPeakCount) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 5; ++n) {
      EXPECT_EQ(peak_span_rank(m, n), count_peak_compositions(m, n)) << m << " " << n;
    }
  }
}

TEST(Multiply, Examples) {
  expect_same_terms(multiply(F(comp(1, {{1, 0}})), F(comp(1, {{1, 0}}))),
                    F(comp(1, {{2, 0}})) + F(comp(1, {{1, 0}, {1, 0}})));
  expect_same_terms(multiply(F(comp(2, {{1, 0}})), F(comp(2, {{1, 1}}))),
                    F(comp(2, {{1, 0}, {1, 1}})) + F(comp(2, {{1, 1}, {1, 0}})));
  const auto a = F(comp(2, {{2, 1}, {1, 0}}), Rational(3, 4));
  expect_same_terms(multiply(QSymElement::unit(2, Basis::F), a), a);
  EXPECT_THROW(multiply(F(comp(1, {{1, 0}})), F(comp(2, {{1, 0}}))), InvariantError);
}

QSymElement quasi_shuffle_product(const QSymElement& a, const QSymElement& b) {
  const auto ma = to_m(a);
  const auto mb = to_m(b);
  QSymElement out(a.colors(), Basis::M);
  for (const auto& [x, xc] : ma.terms()) {
    for (const auto& [y, yc] : mb.terms()) {
      for (const auto& [z, zc] : testing::quasi_shuffle(x, y)) out.add(z, xc * yc * zc);
    }
  }
  return out;
}

TEST(Multiply, AllBasesMatchQuasiShuffle) {
  for (int m = 1; m <= 2; ++m) {
    const auto all = compositions_up_to(m, 4);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (a.weight() + b.weight() > 4) continue;
        expect_same_terms(multiply(M(a), M(b)), quasi_shuffle_product(M(a), M(b)));
        expect_same_terms(f_to_m(multiply(F(a), F(b))), quasi_shuffle_product(F(a), F(b)));
        if (is_peak_composition(a) && is_peak_composition(b)) {
          const auto product = multiply(K(a), K(b));
          EXPECT_EQ(product.basis(), Basis::K);
          expect_same_terms(to_m(product), quasi_shuffle_product(K(a), K(b)));
        }
      }
    }
  }
}

TEST(Multiply, IsCommutativeAndAssociative) {
  testing::Generator gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = F(gen.composition(2, gen.uniform(0, 2)));
    const auto b = F(gen.composition(2, gen.uniform(0, 2)));
    const auto c = M(gen.composition(2, gen.uniform(0, 2)));
    EXPECT_EQ(multiply(a, b), multiply(b, a));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(Coproduct, Examples) {
  const auto delta = coproduct(M(comp(2, {{2, 1}, {1, 0}})));
  LinearCombination<CompositionPair> expected;
  expected.add({comp(2, {{2, 1}, {1, 0}}), comp(2, {})}, 1);
  expected.add({comp(2, {{2, 1}}), comp(2, {{1, 0}})}, 1);
  expected.add({comp(2, {}), comp(2, {{2, 1}, {1, 0}})}, 1);
  EXPECT_EQ(delta.terms, expected);
  EXPECT_EQ(delta.basis, Basis::M);

  LinearCombination<CompositionPair> classical;
  classical.add({comp(1, {{2, 0}, {1, 0}}), comp(1, {})}, 1);
  classical.add({comp(1, {{2, 0}}), comp(1, {{1, 0}})}, 1);
  classical.add({comp(1, {}), comp(1, {{2, 0}, {1, 0}})}, 1);
  EXPECT_EQ(coproduct(M(comp(1, {{2, 0}, {1, 0}}))).terms, classical);

  LinearCombination<CompositionPair> f2;
  f2.add({comp(1, {}), comp(1, {{2, 0}})}, 1);
  f2.add({comp(1, {{1, 0}}), comp(1, {{1, 0}})}, 1);
  f2.add({comp(1, {{2, 0}}), comp(1, {})}, 1);
  const auto delta_f = coproduct(F(comp(1, {{2, 0}})));
  EXPECT_EQ(delta_f.basis, Basis::F);
  EXPECT_EQ(delta_f.terms, f2);
}

TEST(Coproduct, FundamentalAndPeakAgreeWithDeconcatenation) {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& alpha : compositions_up_to(m, 4)) {
      EXPECT_TRUE(tensor_equal(coproduct(F(alpha)), coproduct(f_to_m(F(alpha))))) << alpha;
      if (is_peak_composition(alpha)) {
        EXPECT_TRUE(tensor_equal(coproduct(K(alpha)), coproduct(to_m(K(alpha))))) << alpha;
      }
    }
  }
}

TEST(Antipode, Examples) {
  expect_same_terms(antipode(M(comp(2, {{3, 1}}))), M(comp(2, {{3, 1}}), -1));
  expect_same_terms(antipode(M(comp(1, {{1, 0}, {1, 0}}))), M(comp(1, {{1, 0}, {1, 0}})) + M(comp(1, {{2, 0}})));
  const auto alpha = comp(3, {{1, 0}, {1, 2}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {4, 0}});
  const auto conj = comp(3, {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 2}, {2, 2}, {1, 1}, {1, 1}, {2, 1}, {1, 1}, {1, 2},
                             {1, 0}});
  expect_same_terms(antipode(F(alpha)), F(conj));
}

TEST(Antipode, BasesAgree) {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& alpha : compositions_up_to(m, 4)) {
      expect_same_terms(f_to_m(antipode(F(alpha))), antipode(f_to_m(F(alpha))));
      if (is_peak_composition(alpha)) expect_same_terms(to_m(antipode(K(alpha))), antipode(to_m(K(alpha))));
    }
  }
}

TEST(HopfAxioms, MonomialBasis) {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& alpha : compositions_up_to(m, 4)) {
      const auto delta = coproduct(M(alpha));
      QSymElement left(m, Basis::M);
      QSymElement right(m, Basis::M);
      for (const auto& [pair, c] : delta.terms) {
        left += multiply(antipode(M(pair.first, c)), M(pair.second));
        right += multiply(M(pair.first, c), antipode(M(pair.second)));
      }
      const auto expected = alpha.empty() ? QSymElement::unit(m) : QSymElement(m);
      expect_same_terms(left, expected);
      expect_same_terms(right, expected);
      EXPECT_EQ(M(alpha).counit(), alpha.empty() ? 1 : 0);
    }
  }
}

TEST(Theta, Examples) {
  expect_same_terms(theta(F(comp(1, {{3, 0}, {1, 0}, {1, 0}, {3, 0}, {2, 0}, {1, 0}, {1, 0}, {1, 0}}))),
                    K(comp(1, {{3, 0}, {5, 0}, {2, 0}, {3, 0}})));
  expect_same_terms(theta(F(comp(1, {}))), K(comp(1, {})));
  expect_same_terms(theta(F(comp(2, {{3, 0}, {1, 0}, {1, 1}, {3, 1}, {2, 0}, {1, 1}, {1, 1}, {1, 0}}))),
                    K(comp(2, {{3, 0}, {1, 0}, {4, 1}, {2, 0}, {2, 1}, {1, 0}})));
}

TEST(Theta, IsHopfMorphism) {
  for (int m = 1; m <= 2; ++m) {
    const auto all = compositions_up_to(m, 4);
    for (const auto& a : all) {
      EXPECT_EQ(antipode(theta(F(a))), theta(antipode(F(a)))) << a;
      QSymTensor image{m, Basis::K, {}};
      for (const auto& [pair, c] : coproduct(F(a)).terms) image.terms.add({hat(pair.first), hat(pair.second)}, c);
      EXPECT_TRUE(tensor_equal(coproduct(theta(F(a))), image)) << a;
      for (const auto& b : all) {
        if (a.weight() + b.weight() > 4) continue;
        EXPECT_EQ(theta(multiply(F(a), F(b))), multiply(theta(F(a)), theta(F(b))));
      }
    }
  }
}

TEST(Gamma, Examples) {
  const auto p = testing::poset(1, {{1, 0}, {4, 0}, {5, 0}}, {{5, 1}, {5, 4}});
  expect_same_terms(gamma(p), F(comp(1, {{1, 0}, {1, 0}, {1, 0}})) + F(comp(1, {{1, 0}, {2, 0}})));
  expect_same_terms(gamma(testing::poset(3, {{4, 2}}, {})), F(comp(3, {{1, 2}})));
  const auto pi = testing::perm(2, {{3, 1}, {1, 0}, {2, 0}});
  expect_same_terms(gamma(ColoredPoset::chain(pi)), F(descent_composition(pi)));
}

TEST(Lambda, Examples) {
  const auto point = testing::poset(2, {{1, 1}}, {});
  expect_same_terms(lambda(point), K(comp(2, {{1, 1}})));
  expect_same_terms(to_m(lambda(point)), M(comp(2, {{1, 1}}), 2));
  expect_same_terms(lambda(ColoredPoset::chain(ColoredPermutation::classical({1, 2}))), K(comp(1, {{2, 0}})));
  const auto p = testing::poset(1, {{1, 0}, {4, 0}, {5, 0}}, {{5, 1}, {5, 4}});
  expect_same_terms(lambda(p), K(comp(1, {{3, 0}}), 2));
  expect_same_terms(theta(gamma(p)), lambda(p));
}

TEST(PosetMaps, MorphismsOnSmallPosets) {
  for (int m = 1; m <= 2; ++m) {
    std::vector<ColoredPoset> all;
    for (int n = 0; n <= 3; ++n) {
      for (const auto& p : enumerate_canonical_posets(m, n)) all.push_back(p);
    }
    for (const auto& p : all) {
      const auto single = PosetAlgebraElement::basis(p);
      expect_same_terms(lambda(p), theta(gamma(p)));
      QSymTensor gammas{m, Basis::F, {}};
      QSymTensor lambdas{m, Basis::K, {}};
      for (const auto& [lower, upper] : coproduct_basis(p)) {
        const auto gamma_lower = gamma(lower);
        const auto gamma_upper = gamma(upper);
        const auto lambda_lower = lambda(lower);
        const auto lambda_upper = lambda(upper);
        for (const auto& [a, ac] : gamma_lower.terms()) {
          for (const auto& [b, bc] : gamma_upper.terms()) gammas.terms.add({a, b}, ac * bc);
        }
        for (const auto& [a, ac] : lambda_lower.terms()) {
          for (const auto& [b, bc] : lambda_upper.terms()) lambdas.terms.add({a, b}, ac * bc);
        }
      }
      EXPECT_TRUE(tensor_equal(coproduct(gamma(p)), gammas)) << p;
      EXPECT_TRUE(tensor_equal(coproduct(lambda(p)), lambdas)) << p;
      EXPECT_EQ(gamma(antipode(single)), antipode(gamma(p))) << p;
      for (const auto& q : all) {
        if (p.size() + q.size() > 4) continue;
        const auto both = product(single, PosetAlgebraElement::basis(q));
        EXPECT_EQ(gamma(both), multiply(gamma(p), gamma(q)));
        EXPECT_EQ(lambda(both), multiply(lambda(p), lambda(q)));
      }
    }
  }
}

TEST(Printing, Element) {
  EXPECT_EQ(to_string(F(comp(2, {{2, 0}, {1, 1}}), Rational(-1, 2)) + F(comp(2, {{3, 0}}))),
            "-1/2 F(2,1^1) + F(3)");
  EXPECT_EQ(to_string(QSymElement(1)), "0");
  EXPECT_EQ(parse_basis("K"), Basis::K);
  EXPECT_THROW(parse_basis("Q"), ParseError);
}

}  // namespace
}  // namespace cqsym
