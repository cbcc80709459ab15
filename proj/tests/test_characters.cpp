#include <gtest/gtest.h>

#include "cqsym/characters.hpp"
#include "cqsym/error.hpp"
#include "support.hpp"

namespace cqsym {
namespace {

using testing::comp;

std::vector<ColoredComposition> compositions_up_to(int colors, int max_n) {
  std::vector<ColoredComposition> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& alpha : enumerate_compositions(colors, n)) out.push_back(alpha);
  }
  return out;
}

std::vector<ColoredPoset> posets_up_to(int colors, int max_n) {
  std::vector<ColoredPoset> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& p : enumerate_canonical_posets(colors, n)) out.push_back(p);
  }
  return out;
}

// Every key of every basis up to degree max_n (K restricted to peak keys).
std::vector<QSymKey> qsym_keys(int colors, int max_n) {
  std::vector<QSymKey> out;
  for (const auto& alpha : compositions_up_to(colors, max_n)) {
    out.push_back({Basis::M, alpha});
    out.push_back({Basis::F, alpha});
    if (is_peak_composition(alpha)) out.push_back({Basis::K, alpha});
  }
  return out;
}

QSymElement element(const QSymKey& key) { return QSymElement::basis_element(key.basis, key.alpha); }

TEST(ZetaQ, Examples) {
  const auto zeta = zeta_q(1, 0);
  EXPECT_EQ(zeta({Basis::F, comp(1, {{3, 0}})}), 1);
  EXPECT_EQ(zeta({Basis::F, comp(1, {{2, 0}, {1, 0}})}), 0);
  EXPECT_EQ(zeta({Basis::M, comp(1, {})}), 1);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(zeta_q(3, j)({Basis::K, comp(3, {{4, j}})}), 2);
    EXPECT_EQ(zeta_q(3, j)({Basis::K, comp(3, {{4, (j + 1) % 3}})}), 0);
  }
  EXPECT_THROW(zeta_q(2, 2), InvariantError);
  EXPECT_THROW(zeta_q(2, -1), InvariantError);
}

// The per-basis closed forms agree with evaluating on monomial expansions.
TEST(ZetaQ, ClosedFormsAgreeAcrossBases) {
  for (int m = 1; m <= 3; ++m) {
    std::vector<QSymCharacter> characters = zeta_q_tuple(m);
    characters.push_back(zeta_q_product(m));
    for (const auto& phi : characters) {
      for (const auto& key : qsym_keys(m, 4)) {
        EXPECT_EQ(phi(key), phi(to_m(element(key)))) << phi.name() << " " << key.alpha;
      }
    }
  }
}

TEST(ZetaQ, ProductMatchesConvolution) {
  for (int m = 1; m <= 3; ++m) {
    const auto closed = zeta_q_product(m);
    const auto convolved = convolve_all(zeta_q_tuple(m), m);
    for (const auto& key : qsym_keys(m, 4)) EXPECT_EQ(closed(key), convolved(key)) << key.alpha;
  }
  const auto zeta = zeta_q_product(3);
  EXPECT_EQ(zeta({Basis::F, comp(3, {{2, 0}, {1, 2}})}), 1);
  EXPECT_EQ(zeta({Basis::F, comp(3, {{2, 1}, {1, 0}})}), 0);
  EXPECT_EQ(zeta({Basis::F, comp(3, {{2, 0}, {1, 0}})}), 0);
  EXPECT_EQ(zeta({Basis::K, comp(3, {{2, 0}, {1, 1}, {3, 2}})}), 8);
}

TEST(ZetaP, Examples) {
  const auto chain = ColoredPoset::chain(testing::perm(2, {{1, 1}, {2, 1}, {3, 1}}));
  EXPECT_EQ(zeta_p(2, 1)(chain), 1);
  EXPECT_EQ(zeta_p(2, 0)(chain), 0);
  const auto mixed = testing::poset(2, {{1, 0}, {2, 1}}, {{1, 2}});
  for (int j = 0; j < 2; ++j) EXPECT_EQ(zeta_p(2, j)(mixed), 0);
  EXPECT_EQ(zeta_p_product(2)(mixed), 1);
  EXPECT_EQ(zeta_p(2, 0)(ColoredPoset(2)), 1);
}

TEST(ZetaP, FactorsThroughGamma) {
  for (int m = 1; m <= 2; ++m) {
    const auto zetas_p = zeta_p_tuple(m);
    const auto zetas_q = zeta_q_tuple(m);
    const auto product_p = zeta_p_product(m);
    const auto convolved_p = convolve_all(zetas_p, m);
    const auto product_q = zeta_q_product(m);
    for (const auto& p : posets_up_to(m, 4)) {
      const auto image = gamma(p);
      for (int j = 0; j < m; ++j) {
        EXPECT_EQ(zetas_p[static_cast<std::size_t>(j)](p), zetas_q[static_cast<std::size_t>(j)](image)) << p;
      }
      EXPECT_EQ(product_p(p), product_q(image)) << p;
      EXPECT_EQ(product_p(p), convolved_p(p)) << p;
    }
  }
}

TEST(Convolution, UnitAndAssociativity) {
  const int m = 2;
  const auto unit = counit_character<QSymHopf>(m);
  const auto a = zeta_q(m, 0);
  const auto b = bar(zeta_q(m, 1));
  const auto c = inverse(zeta_q(m, 0));
  const auto left = convolve(convolve(a, b), c);
  const auto right = convolve(a, convolve(b, c));
  for (const auto& key : qsym_keys(m, 4)) {
    EXPECT_EQ(convolve(unit, a)(key), a(key));
    EXPECT_EQ(convolve(a, unit)(key), a(key));
    EXPECT_EQ(left(key), right(key)) << key.alpha;
  }
  EXPECT_THROW(convolve(a, zeta_q(3, 0)), InvariantError);
}

TEST(Convolution, GroupInverses) {
  for (int m = 1; m <= 2; ++m) {
    const auto unit = counit_character<QSymHopf>(m);
    std::vector<QSymCharacter> group;
    for (int j = 0; j < m; ++j) {
      group.push_back(zeta_q(m, j));
      group.push_back(bar(zeta_q(m, j)));
      group.push_back(inverse(zeta_q(m, j)));
    }
    for (const auto& phi : group) {
      const auto inv = inverse(phi);
      const auto twice = inverse(inv);
      const auto left = convolve(inv, phi);
      const auto right = convolve(phi, inv);
      for (const auto& key : qsym_keys(m, 4)) {
        EXPECT_EQ(left(key), unit(key)) << phi.name() << " " << key.alpha;
        EXPECT_EQ(right(key), unit(key)) << phi.name() << " " << key.alpha;
        EXPECT_EQ(twice(key), phi(key)) << phi.name() << " " << key.alpha;
      }
    }
  }
}

TEST(Convolution, InverseOfCounit) {
  const auto unit = counit_character<PosetHopf>(2);
  const auto inv = inverse(unit);
  for (const auto& p : posets_up_to(2, 3)) EXPECT_EQ(inv(p), unit(p));
}

TEST(Bar, Examples) {
  const auto zeta = zeta_q(1, 0);
  EXPECT_EQ(bar(zeta)({Basis::F, comp(1, {{3, 0}})}), -1);
  EXPECT_EQ(bar(zeta)({Basis::F, comp(1, {{2, 0}})}), 1);
  EXPECT_EQ(bar(zeta)({Basis::M, comp(1, {})}), 1);
  const auto twice = bar(bar(zeta_q_product(2)));
  for (const auto& key : qsym_keys(2, 3)) EXPECT_EQ(twice(key), zeta_q_product(2)(key));
}

TEST(Nu, AntichainOfTwo) {
  const auto antichain = ColoredPoset::antichain(1, {{1, 0}, {2, 0}});
  EXPECT_EQ(nu(zeta_p(1, 0))(antichain), 4);
  EXPECT_EQ(count_nu_p(antichain, 0), 4);
  EXPECT_EQ(nu_p_product(1)(antichain), 4);
}

TEST(Nu, MatchesCountingFormulas) {
  for (int m = 1; m <= 2; ++m) {
    const auto nus = nu_p_tuple(m);
    const auto nu_product = nu_p_product(m);
    const auto zetas_q = zeta_q_tuple(m);
    const auto zeta_q_all = zeta_q_product(m);
    for (const auto& p : posets_up_to(m, 4)) {
      const auto image = lambda(p);
      for (int j = 0; j < m; ++j) {
        const auto& nu_j = nus[static_cast<std::size_t>(j)];
        EXPECT_EQ(nu_j(p), count_nu_p(p, j)) << p << " color " << j;
        EXPECT_EQ(nu_j(p), zetas_q[static_cast<std::size_t>(j)](image)) << p << " color " << j;
      }
      EXPECT_EQ(nu_product(p), count_nu_p_product(p)) << p;
      EXPECT_EQ(nu_product(p), zeta_q_all(image)) << p;
    }
  }
}

TEST(Nu, IsOdd) {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& phi : nu_p_tuple(m)) {
      const auto barred = bar(phi);
      const auto inv = inverse(phi);
      for (const auto& p : posets_up_to(m, 4)) EXPECT_EQ(barred(p), inv(p)) << phi.name() << " " << p;
    }
    for (const auto& phi : nu_q_tuple(m)) {
      const auto barred = bar(phi);
      const auto inv = inverse(phi);
      for (const auto& key : qsym_keys(m, 4)) EXPECT_EQ(barred(key), inv(key)) << phi.name() << " " << key.alpha;
    }
  }
}

TEST(Nu, QSymFactorsThroughTheta) {
  for (int m = 1; m <= 2; ++m) {
    const auto nus = nu_q_tuple(m);
    const auto zetas = zeta_q_tuple(m);
    for (const auto& alpha : compositions_up_to(m, 4)) {
      const auto f = QSymElement::basis_element(Basis::F, alpha);
      for (int j = 0; j < m; ++j) {
        EXPECT_EQ(nus[static_cast<std::size_t>(j)](f), zetas[static_cast<std::size_t>(j)](theta(f))) << alpha;
      }
      EXPECT_EQ(nu_q_product(m)(f), zeta_q_product(m)(theta(f))) << alpha;
    }
  }
}

TEST(Psi, Examples) {
  for (int j = 0; j < 2; ++j) {
    const auto point = PosetAlgebraElement::basis(testing::poset(2, {{1, j}}, {}));
    EXPECT_EQ(psi(point, zeta_p_tuple(2)).terms(), QSymElement::basis_element(Basis::M, comp(2, {{1, j}})).terms());
  }
  EXPECT_EQ(psi(PosetAlgebraElement::unit(2), zeta_p_tuple(2)).terms(), QSymElement::unit(2).terms());
  EXPECT_THROW(psi(PosetAlgebraElement::unit(2), zeta_p_tuple(1)), InvariantError);
  EXPECT_THROW(psi(PosetAlgebraElement::unit(2), zeta_p_tuple(3)), InvariantError);
}

TEST(Psi, ZetaTupleGivesGamma) {
  for (int m = 1; m <= 2; ++m) {
    const auto zetas = zeta_p_tuple(m);
    for (const auto& p : posets_up_to(m, 4)) {
      const auto got = psi(PosetAlgebraElement::basis(p), zetas);
      EXPECT_EQ(got.basis(), Basis::M);
      EXPECT_EQ(got.terms(), f_to_m(gamma(p)).terms()) << p;
    }
  }
}

TEST(Psi, NuTupleGivesLambda) {
  for (int m = 1; m <= 2; ++m) {
    const auto nus = nu_p_tuple(m);
    for (const auto& p : posets_up_to(m, 3)) {
      EXPECT_EQ(psi(PosetAlgebraElement::basis(p), nus).terms(), to_m(lambda(p)).terms()) << p;
    }
  }
}

TEST(Psi, IsIdentityOnQSym) {
  for (int m = 1; m <= 2; ++m) {
    const auto zetas = zeta_q_tuple(m);
    for (const auto& key : qsym_keys(m, 4)) {
      EXPECT_EQ(psi(element(key), zetas).terms(), to_m(element(key)).terms()) << key.alpha;
    }
  }
}

TEST(Psi, IsMultiplicative) {
  testing::Generator gen(71);
  const int m = 2;
  const auto zetas = zeta_p_tuple(m);
  const auto nus = nu_p_tuple(m);
  const auto all = posets_up_to(m, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& p = all[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(all.size()) - 1))];
    const auto& q = all[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(all.size()) - 1))];
    const auto a = PosetAlgebraElement::basis(p);
    const auto b = PosetAlgebraElement::basis(q);
    EXPECT_EQ(psi(product(a, b), zetas), multiply(psi(a, zetas), psi(b, zetas))) << p << " " << q;
    EXPECT_EQ(psi(product(a, b), nus), multiply(psi(a, nus), psi(b, nus))) << p << " " << q;
  }
}

TEST(Names, BuiltinsResolve) {
  EXPECT_EQ(qsym_character("zetaQ:1", 2).name(), "zetaQ:1");
  EXPECT_EQ(poset_character("nuP", 2).name(), "nuP");
  EXPECT_EQ(poset_character("counit", 2)(ColoredPoset(2)), 1);
  EXPECT_THROW(qsym_character("zetaP:0", 2), ParseError);
  EXPECT_THROW(qsym_character("zetaQ:x", 2), ParseError);
  EXPECT_THROW(poset_character("nuP:5", 2), InvariantError);
}

}  // namespace
}  // namespace cqsym
