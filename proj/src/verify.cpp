#include "cqsym/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "cqsym/characters.hpp"
#include "cqsym/error.hpp"
#include "cqsym/oracle.hpp"
#include "cqsym/poset.hpp"
#include "cqsym/qsym.hpp"

namespace cqsym {

void SuiteReport::expect(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(describe());
}

void SuiteReport::absorb(const SuiteReport& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& c : other.counterexamples) {
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
  }
}

namespace {

template <class T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

QSymElement basis_element(Basis basis, const ColoredComposition& alpha) {
  return QSymElement::basis_element(basis, alpha);
}

std::vector<ColoredComposition> compositions_up_to(int colors, int max_degree) {
  std::vector<ColoredComposition> out;
  for (int n = 0; n <= max_degree; ++n) {
    for (auto& alpha : enumerate_compositions(colors, n)) out.push_back(std::move(alpha));
  }
  return out;
}

// Canonical posets of sizes 0..max_size under integer ids, with coproducts
// and products expressed on ids.
class PosetIndex {
 public:
  using IdPair = std::pair<int, int>;

  PosetIndex(int colors, int max_size) {
    for (int n = 0; n <= max_size; ++n) {
      for (auto& p : enumerate_canonical_posets(colors, n)) {
        ids_.emplace(p, static_cast<int>(posets_.size()));
        posets_.push_back(std::move(p));
      }
    }
    coproducts_.resize(posets_.size());
    for (std::size_t i = 0; i < posets_.size(); ++i) {
      for (const auto& [lower, upper] : coproduct_basis(posets_[i])) coproducts_[i].emplace_back(id(lower), id(upper));
    }
  }

  int size() const { return static_cast<int>(posets_.size()); }
  const ColoredPoset& poset(int i) const { return posets_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return static_cast<int>(poset(i).size()); }
  const std::vector<IdPair>& coproduct(int i) const { return coproducts_[static_cast<std::size_t>(i)]; }
  int empty_id() const { return 0; }

  int id(const ColoredPoset& canonical) const {
    auto it = ids_.find(canonical);
    if (it == ids_.end()) throw InvariantError("poset-index", "poset outside the verification grid");
    return it->second;
  }

  int product(int a, int b) const { return id(product_basis(poset(a), poset(b))); }

  /// Unordered pairs of nonempty posets with total size at most the grid size.
  std::vector<IdPair> pairs(int max_size) const {
    std::vector<IdPair> out;
    for (int a = 1; a < size(); ++a) {
      for (int b = a; b < size(); ++b) {
        if (degree(a) + degree(b) <= max_size) out.emplace_back(a, b);
      }
    }
    return out;
  }

 private:
  std::vector<ColoredPoset> posets_;
  std::map<ColoredPoset, int> ids_;
  std::vector<std::vector<IdPair>> coproducts_;
};

std::vector<PosetIndex::IdPair> sorted(std::vector<PosetIndex::IdPair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// hopf-axioms

void poset_hopf_axioms(SuiteReport& report, const PosetIndex& index, int max_size) {
  using Triple = std::array<int, 3>;
  const int colors = index.poset(0).colors();
  for (int p = 0; p < index.size(); ++p) {
    const auto& delta = index.coproduct(p);
    const auto& poset = index.poset(p);

    std::vector<int> lefts, rights;
    for (const auto& [a, b] : delta) {
      if (a == index.empty_id()) rights.push_back(b);
      if (b == index.empty_id()) lefts.push_back(a);
    }
    report.expect(rights == std::vector<int>{p} && lefts == std::vector<int>{p},
                  [&] { return "counit: " + show(poset); });

    std::vector<Triple> first, second;
    for (const auto& [a, b] : delta) {
      for (const auto& [aa, ab] : index.coproduct(a)) first.push_back({aa, ab, b});
      for (const auto& [ba, bb] : index.coproduct(b)) second.push_back({a, ba, bb});
    }
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    report.expect(first == second, [&] { return "coassociativity: " + show(poset); });

    const auto expected = poset.empty() ? PosetAlgebraElement::unit(colors) : PosetAlgebraElement(colors);
    PosetAlgebraElement left_sum(colors), right_sum(colors);
    for (const auto& [a, b] : delta) {
      const auto s_left = antipode(PosetAlgebraElement::basis(index.poset(a)));
      const auto s_right = antipode(PosetAlgebraElement::basis(index.poset(b)));
      left_sum += product(s_left, PosetAlgebraElement::basis(index.poset(b)));
      right_sum += product(PosetAlgebraElement::basis(index.poset(a)), s_right);
    }
    report.expect(left_sum == expected, [&] { return "m(S x id)delta != unit counit: " + show(poset); });
    report.expect(right_sum == expected, [&] { return "m(id x S)delta != unit counit: " + show(poset); });
  }

  for (const auto& [p, q] : index.pairs(max_size)) {
    std::vector<PosetIndex::IdPair> image;
    for (const auto& [a, b] : index.coproduct(p)) {
      for (const auto& [c, d] : index.coproduct(q)) image.emplace_back(index.product(a, c), index.product(b, d));
    }
    report.expect(sorted(index.coproduct(index.product(p, q))) == sorted(image),
                  [&] { return "bialgebra: " + show(index.poset(p)) + " * " + show(index.poset(q)); });
  }
}

void qsym_hopf_axioms(SuiteReport& report, int colors, int max_degree) {
  using Triple = std::tuple<ColoredComposition, ColoredComposition, ColoredComposition>;
  const auto all = compositions_up_to(colors, max_degree);
  const ColoredComposition empty(colors, {});
  for (const auto& alpha : all) {
    const auto m_alpha = basis_element(Basis::M, alpha);
    const auto delta = coproduct(m_alpha);

    QSymElement lefts(colors), rights(colors);
    for (const auto& [pair, c] : delta.terms) {
      if (pair.first == empty) rights.add(pair.second, c);
      if (pair.second == empty) lefts.add(pair.first, c);
    }
    report.expect(lefts == m_alpha && rights == m_alpha, [&] { return "counit: M" + show(alpha); });

    LinearCombination<Triple> first, second;
    for (const auto& [pair, c] : delta.terms) {
      const auto left = coproduct(basis_element(Basis::M, pair.first));
      const auto right = coproduct(basis_element(Basis::M, pair.second));
      for (const auto& [inner, d] : left.terms) first.add({inner.first, inner.second, pair.second}, c * d);
      for (const auto& [inner, d] : right.terms) second.add({pair.first, inner.first, inner.second}, c * d);
    }
    report.expect(first == second, [&] { return "coassociativity: M" + show(alpha); });

    const auto expected = alpha.empty() ? QSymElement::unit(colors) : QSymElement(colors);
    QSymElement left_sum(colors), right_sum(colors);
    for (const auto& [pair, c] : delta.terms) {
      const auto a = basis_element(Basis::M, pair.first);
      const auto b = basis_element(Basis::M, pair.second);
      left_sum += c * to_m(multiply(antipode(a), b));
      right_sum += c * to_m(multiply(a, antipode(b)));
    }
    report.expect(left_sum == expected, [&] { return "m(S x id)delta: M" + show(alpha); });
    report.expect(right_sum == expected, [&] { return "m(id x S)delta: M" + show(alpha); });
  }

  for (const auto& alpha : all) {
    for (const auto& beta : all) {
      if (alpha.empty() || beta.empty() || alpha.weight() + beta.weight() > max_degree) continue;
      const auto a = basis_element(Basis::M, alpha);
      const auto b = basis_element(Basis::M, beta);
      const auto whole = coproduct(to_m(multiply(a, b)));
      const auto parts = tensor_product(coproduct(a), coproduct(b));
      report.expect(tensor_equal(whole, parts), [&] { return "bialgebra: M" + show(alpha) + " * M" + show(beta); });
    }
  }
}

SuiteReport hopf_axioms(const VerifyOptions& options) {
  SuiteReport report;
  for (int m = 1; m <= options.colors; ++m) {
    poset_hopf_axioms(report, PosetIndex(m, options.max_size), options.max_size);
    qsym_hopf_axioms(report, m, options.max_degree);
  }
  return report;
}

// ---------------------------------------------------------------------------
// gamma-morphism, lambda-morphism

using PosetMap = QSymElement (*)(const ColoredPoset&);

// Images of the indexed posets under gamma or lambda, computed once.
class ImageCache {
 public:
  ImageCache(const PosetIndex& index, PosetMap map) : index_(index), images_(static_cast<std::size_t>(index.size())) {
    for (int i = 0; i < index.size(); ++i) images_[static_cast<std::size_t>(i)] = map(index.poset(i));
  }

  const QSymElement& operator[](int i) const { return images_[static_cast<std::size_t>(i)]; }

  QSymElement operator()(const PosetAlgebraElement& element) const {
    LinearCombination<ColoredComposition> sum;
    for (const auto& [poset, c] : element.terms()) {
      sum.add_scaled(images_[static_cast<std::size_t>(index_.id(poset))].terms(), c);
    }
    QSymElement out(element.colors(), images_.front().basis());
    for (const auto& [alpha, c] : sum) out.add(alpha, c);
    return out;
  }

 private:
  const PosetIndex& index_;
  std::vector<QSymElement> images_;
};

// Coordinates compared directly when both sides share a basis; the
// monomial expansions otherwise.
bool same(const QSymElement& a, const QSymElement& b) {
  return a.basis() == b.basis() ? a.terms() == b.terms() : a == b;
}

bool same(const QSymTensor& a, const QSymTensor& b) {
  return a.basis == b.basis ? a.terms == b.terms : tensor_equal(a, b);
}

QSymTensor image_tensor(const ImageCache& images, const std::vector<PosetIndex::IdPair>& delta, int colors,
                        Basis basis) {
  QSymTensor out{colors, basis, {}};
  for (const auto& [a, b] : delta) {
    for (const auto& [alpha, c] : images[a].terms()) {
      for (const auto& [beta, d] : images[b].terms()) out.terms.add({alpha, beta}, c * d);
    }
  }
  return out;
}

void poset_morphism(SuiteReport& report, const PosetIndex& index, const ImageCache& images, int max_size,
                    const std::string& label) {
  const int colors = index.poset(0).colors();
  const Basis basis = images[0].basis();
  report.expect(images[index.empty_id()] == QSymElement::unit(colors),
                [&] { return label + " of the empty poset is not 1"; });
  for (int p = 0; p < index.size(); ++p) {
    const auto& poset = index.poset(p);
    report.expect(images[p].counit() == (poset.empty() ? 1 : 0), [&] { return label + " counit: " + show(poset); });
    const auto delta = coproduct(images[p]);
    report.expect(same(delta, image_tensor(images, index.coproduct(p), colors, basis)),
                  [&] { return label + " coalgebra: " + show(poset); });
    const auto s = antipode(PosetAlgebraElement::basis(poset));
    report.expect(same(images(s), antipode(images[p])), [&] { return label + " antipode: " + show(poset); });
  }
  for (const auto& [p, q] : index.pairs(max_size)) {
    report.expect(same(images[index.product(p, q)], multiply(images[p], images[q])),
                  [&] { return label + " algebra: " + show(index.poset(p)) + " * " + show(index.poset(q)); });
  }
}

QSymElement gamma_of(const ColoredPoset& p) { return gamma(p); }
QSymElement lambda_of(const ColoredPoset& p) { return lambda(p); }

SuiteReport gamma_morphism(const VerifyOptions& options) {
  SuiteReport report;
  for (int m = 1; m <= options.colors; ++m) {
    const PosetIndex index(m, options.max_size);
    poset_morphism(report, index, ImageCache(index, gamma_of), options.max_size, "gamma");
  }
  return report;
}

SuiteReport lambda_morphism(const VerifyOptions& options) {
  SuiteReport report;
  for (int m = 1; m <= options.colors; ++m) {
    const PosetIndex index(m, options.max_size);
    poset_morphism(report, index, ImageCache(index, lambda_of), options.max_size, "lambda");
  }
  return report;
}

// ---------------------------------------------------------------------------
// theta-morphism

SuiteReport theta_morphism(const VerifyOptions& options) {
  SuiteReport report;
  for (int m = 1; m <= options.colors; ++m) {
    const auto all = compositions_up_to(m, options.max_degree);
    for (const auto& alpha : all) {
      const auto f = basis_element(Basis::F, alpha);
      const auto image = theta(f);
      report.expect(image.terms() == LinearCombination<ColoredComposition>::single(hat(alpha)),
                    [&] { return "theta(F" + show(alpha) + ") != K at hat"; });
      report.expect(same(antipode(image), theta(antipode(f))), [&] { return "S theta != theta S on F" + show(alpha); });
      QSymTensor mapped{m, Basis::K, {}};
      for (const auto& [pair, c] : coproduct(f).terms) mapped.terms.add({hat(pair.first), hat(pair.second)}, c);
      report.expect(same(coproduct(image), mapped), [&] { return "theta coalgebra on F" + show(alpha); });
      for (const auto& beta : all) {
        if (alpha.weight() + beta.weight() > options.max_degree) continue;
        const auto g = basis_element(Basis::F, beta);
        report.expect(same(theta(multiply(f, g)), multiply(image, theta(g))),
                      [&] { return "theta algebra on F" + show(alpha) + " * F" + show(beta); });
      }
    }
    const PosetIndex index(m, options.max_size);
    for (int p = 0; p < index.size(); ++p) {
      const auto& poset = index.poset(p);
      report.expect(same(lambda(poset), theta(gamma(poset))), [&] { return "lambda != theta gamma: " + show(poset); });
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// antipode-consistency

ColoredComposition slice(const ColoredComposition& alpha, std::size_t begin, std::size_t end) {
  const auto& parts = alpha.parts();
  return ColoredComposition(alpha.colors(), std::vector<ColoredPart>(parts.begin() + static_cast<std::ptrdiff_t>(begin),
                                                                      parts.begin() + static_cast<std::ptrdiff_t>(end)));
}

// S(M_a) = -M_a - sum over proper splits a = b.c of S(M_b) M_c.
const QSymElement& inductive_m_antipode(const ColoredComposition& alpha,
                                        std::map<ColoredComposition, QSymElement>& memo) {
  if (auto it = memo.find(alpha); it != memo.end()) return it->second;
  QSymElement out(alpha.colors(), Basis::M);
  if (alpha.empty()) {
    out = QSymElement::unit(alpha.colors());
  } else {
    out -= basis_element(Basis::M, alpha);
    for (std::size_t i = 1; i < alpha.length(); ++i) {
      const auto head = inductive_m_antipode(slice(alpha, 0, i), memo);
      out -= to_m(multiply(head, basis_element(Basis::M, slice(alpha, i, alpha.length()))));
    }
  }
  return memo.emplace(alpha, std::move(out)).first->second;
}

QSymElement closed_m_antipode(const ColoredComposition& alpha) {
  QSymElement out(alpha.colors(), Basis::M);
  for (const auto& beta : coarsenings(alpha)) out.add(reverse(beta), sign_power(alpha.length()));
  return out;
}

SuiteReport antipode_consistency(const VerifyOptions& options) {
  SuiteReport report;
  for (int m = 1; m <= options.colors; ++m) {
    std::map<ColoredComposition, QSymElement> memo;
    for (const auto& alpha : compositions_up_to(m, options.max_degree)) {
      const auto closed = closed_m_antipode(alpha);
      const auto library = antipode(basis_element(Basis::M, alpha));
      report.expect(closed.terms() == inductive_m_antipode(alpha, memo).terms(),
                    [&] { return "closed form != inductive on M" + show(alpha); });
      report.expect(library.terms() == closed.terms(), [&] { return "antipode != closed form on M" + show(alpha); });

      const auto f = basis_element(Basis::F, alpha);
      const auto s_f = antipode(f);
      report.expect(s_f.terms() == LinearCombination<ColoredComposition>::single(
                                       conjugate(alpha), sign_power(static_cast<std::size_t>(alpha.weight()))),
                    [&] { return "S(F) != signed conjugate on F" + show(alpha); });
      report.expect(f_to_m(s_f).terms() == antipode(f_to_m(f)).terms(),
                    [&] { return "F route != M route on F" + show(alpha); });

      if (is_peak_composition(alpha)) {
        const auto k = basis_element(Basis::K, alpha);
        report.expect(to_m(antipode(k)).terms() == antipode(to_m(k)).terms(),
                      [&] { return "K route != M route on K" + show(alpha); });
      }
    }
    const PosetIndex index(m, options.max_size);
    for (int p = 0; p < index.size(); ++p) {
      const auto x = PosetAlgebraElement::basis(index.poset(p));
      report.expect(antipode(x, AntipodeMethod::inductive) == antipode(x, AntipodeMethod::ideal_chains),
                    [&] { return "inductive != ideal chains: " + show(index.poset(p)); });
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// oracle-equivalence

SuiteReport oracle_equivalence(const VerifyOptions& options) {
  SuiteReport report;
  const int split = std::min(options.alphabet, 2);
  for (int m = 1; m <= options.colors; ++m) {
    const PosetIndex index(m, options.max_size);
    for (int p = 0; p < index.size(); ++p) {
      const auto& poset = index.poset(p);
      const auto g = gamma(poset);
      const auto l = lambda(poset);
      for (int n = 1; n <= options.alphabet; ++n) {
        report.expect(enumerate_ppartitions(poset, n) == truncate(g, n),
                      [&] { return "P-partitions != gamma at N=" + std::to_string(n) + ": " + show(poset); });
        report.expect(enumerate_enriched(poset, n) == truncate(l, n),
                      [&] { return "enriched != lambda at N=" + std::to_string(n) + ": " + show(poset); });
      }

      TruncatedPolynomial plain(split, m), enriched(split, m);
      for (const auto& pi : linear_extensions(poset)) {
        const auto chain = ColoredPoset::chain(pi);
        const auto plain_part = enumerate_ppartitions(chain, split);
        const auto enriched_part = enumerate_enriched(chain, split);
        for (const auto& [e, c] : plain_part.terms()) plain.add(e, c);
        for (const auto& [e, c] : enriched_part.terms()) enriched.add(e, c);
      }
      report.expect(plain == enumerate_ppartitions(poset, split) && enriched == enumerate_enriched(poset, split),
                    [&] { return "per-extension sum != whole: " + show(poset); });

      const auto halves = split_alphabet_report(poset, split);
      report.expect(halves.holds(), [&] {
        return "split alphabet: " + show(poset) + " whole " + halves.whole_count.get_str() + " split " +
               halves.split_count.get_str();
      });
    }
    for (const auto& [p, q] : index.pairs(options.max_size)) {
      const auto both = disjoint_union(index.poset(p), index.poset(q));
      for (int n = 1; n <= options.alphabet; ++n) {
        const bool ok = enumerate_ppartitions(both, n) ==
                            enumerate_ppartitions(index.poset(p), n) * enumerate_ppartitions(index.poset(q), n) &&
                        enumerate_enriched(both, n) ==
                            enumerate_enriched(index.poset(p), n) * enumerate_enriched(index.poset(q), n);
        report.expect(ok, [&] {
          return "product law at N=" + std::to_string(n) + ": " + show(index.poset(p)) + " * " + show(index.poset(q));
        });
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// character-group, nu-counting, universality

template <class Algebra>
void group_identities(SuiteReport& report, const Character<Algebra>& phi, const typename Algebra::Key& key,
                      const std::string& shown) {
  const Rational unit = Algebra::degree(key) == 0 ? 1 : 0;
  const auto inv = inverse(phi);
  report.expect(convolve(phi, inv)(key) == unit && convolve(inv, phi)(key) == unit,
                [&] { return phi.name() + " * inverse != counit on " + shown; });
}

SuiteReport character_group(const VerifyOptions& options) {
  SuiteReport report;
  std::mt19937_64 rng(options.seed);
  for (int m = 1; m <= options.colors; ++m) {
    const PosetIndex index(m, options.max_size);
    const auto zeta_ps = zeta_p_tuple(m);
    const auto zeta_qs = zeta_q_tuple(m);
    const auto nus = nu_p_tuple(m);
    std::vector<PosetCharacter> odd;
    for (const auto& nu_j : nus) odd.push_back(bar(nu_j));
    std::vector<PosetCharacter> nu_inverses;
    for (const auto& nu_j : nus) nu_inverses.push_back(inverse(nu_j));
    const auto zeta_p_all = zeta_p_product(m);
    const auto zeta_q_all = zeta_q_product(m);

    for (int p = 0; p < index.size(); ++p) {
      const auto& poset = index.poset(p);
      const auto shown = show(poset);
      const auto g = gamma(poset);
      for (int j = 0; j < m; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        report.expect(zeta_ps[sj](poset) == zeta_qs[sj](g), [&] { return "zetaP != zetaQ gamma: " + shown; });
        report.expect(odd[sj](poset) == nu_inverses[sj](poset), [&] { return nus[sj].name() + " not odd: " + shown; });
        group_identities(report, zeta_ps[sj], poset, shown);
      }
      report.expect(zeta_p_all(poset) == zeta_q_all(g), [&] { return "zetaP product != zetaQ gamma: " + shown; });
      group_identities(report, zeta_p_all, poset, shown);
    }
    for (const auto& alpha : compositions_up_to(m, options.max_degree)) {
      const QSymKey key{Basis::M, alpha};
      for (const auto& zeta_j : zeta_qs) group_identities(report, zeta_j, key, "M" + show(alpha));
      group_identities(report, zeta_q_all, key, "M" + show(alpha));
    }

    const auto pairs = index.pairs(options.max_size);
    if (pairs.empty()) continue;
    const auto nu_all = nu_p_product(m);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const auto [p, q] = pairs[pick(rng)];
      const auto& a = index.poset(p);
      const auto& b = index.poset(q);
      const auto ab = index.poset(index.product(p, q));
      for (const auto& phi : {zeta_p_all, nu_all, convolve(nus.front(), inverse(zeta_ps.back()))}) {
        report.expect(phi(ab) == phi(a) * phi(b),
                      [&] { return phi.name() + " not multiplicative on " + show(a) + " * " + show(b); });
      }
    }
  }
  return report;
}

SuiteReport nu_counting(const VerifyOptions& options) {
  SuiteReport report;
  for (int m = 1; m <= options.colors; ++m) {
    const PosetIndex index(m, options.max_size);
    const auto nus = nu_p_tuple(m);
    const auto nu_qs = nu_q_tuple(m);
    const auto nu_all = nu_p_product(m);
    for (int p = 0; p < index.size(); ++p) {
      const auto& poset = index.poset(p);
      const auto g = gamma(poset);
      for (int j = 0; j < m; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        const auto value = nus[sj](poset);
        report.expect(value == count_nu_p(poset, j), [&] {
          return nus[sj].name() + " = " + to_string(value) + " vs count " + to_string(count_nu_p(poset, j)) + ": " +
                 show(poset);
        });
        report.expect(value == nu_qs[sj](g), [&] { return nus[sj].name() + " != nuQ gamma: " + show(poset); });
      }
      const auto value = nu_all(poset);
      report.expect(value == count_nu_p_product(poset), [&] {
        return "nuP = " + to_string(value) + " vs count " + to_string(count_nu_p_product(poset)) + ": " + show(poset);
      });
    }
  }
  return report;
}

SuiteReport universality(const VerifyOptions& options) {
  SuiteReport report;
  for (int m = 1; m <= options.colors; ++m) {
    const PosetIndex index(m, options.max_size);
    const auto zetas = zeta_p_tuple(m);
    const auto nus = nu_p_tuple(m);
    for (int p = 0; p < index.size(); ++p) {
      const auto& poset = index.poset(p);
      const auto x = PosetAlgebraElement::basis(poset);
      report.expect(psi(x, zetas).terms() == f_to_m(gamma(poset)).terms(),
                    [&] { return "psi(zetaP) != gamma: " + show(poset); });
      report.expect(psi(x, nus).terms() == to_m(lambda(poset)).terms(),
                    [&] { return "psi(nuP) != lambda: " + show(poset); });
    }
    const auto zeta_qs = zeta_q_tuple(m);
    for (const auto& alpha : compositions_up_to(m, options.max_degree)) {
      const auto m_alpha = basis_element(Basis::M, alpha);
      report.expect(psi(m_alpha, zeta_qs).terms() == m_alpha.terms(),
                    [&] { return "psi(zetaQ) != identity on M" + show(alpha); });
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// dimension-counts

std::uint64_t power(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

SuiteReport dimension_counts(const VerifyOptions& options) {
  SuiteReport report;
  // Published values: QSym and peak dimensions for m = 1, 2 and n = 1..5.
  const std::map<int, std::pair<std::array<std::uint64_t, 5>, std::array<std::uint64_t, 5>>> published{
      {1, {{1, 2, 4, 8, 16}, {1, 1, 2, 3, 5}}},
      {2, {{2, 6, 18, 54, 162}, {2, 4, 10, 24, 58}}},
  };
  for (int m = 1; m <= options.colors; ++m) {
    for (const auto& row : dimension_rows(m, options.max_degree)) {
      const auto where = "m=" + std::to_string(m) + " n=" + std::to_string(row.n);
      report.expect(row.qsym_formula == row.qsym_enumerated, [&] {
        return where + ": m(m+1)^(n-1) = " + std::to_string(row.qsym_formula) + " but " +
               std::to_string(row.qsym_enumerated) + " compositions";
      });
      report.expect(row.peak_recurrence == row.peak_enumerated && row.peak_recurrence == row.peak_rank, [&] {
        return where + ": f = " + std::to_string(row.peak_recurrence) + ", peak compositions " +
               std::to_string(row.peak_enumerated) + ", rank " + std::to_string(row.peak_rank);
      });
      auto it = published.find(m);
      if (it != published.end() && row.n <= 5) {
        const auto i = static_cast<std::size_t>(row.n - 1);
        report.expect(row.qsym_enumerated == it->second.first[i] && row.peak_rank == it->second.second[i],
                      [&] { return where + ": differs from the published table"; });
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// golden-examples

ColoredComposition comp(int colors, std::initializer_list<std::pair<int, int>> parts) {
  std::vector<ColoredPart> out;
  for (const auto& [size, color] : parts) out.push_back({size, color});
  return ColoredComposition(colors, std::move(out));
}

ColoredPoset poset(int colors, std::initializer_list<std::pair<int, int>> elements,
                   const std::vector<std::pair<int, int>>& relations) {
  std::vector<ColoredLetter> out;
  for (const auto& [value, color] : elements) out.push_back({value, color});
  return ColoredPoset(colors, std::move(out), relations);
}

QSymElement sum(Basis basis, std::initializer_list<std::pair<ColoredComposition, int>> terms) {
  QSymElement out(terms.begin()->first.colors(), basis);
  for (const auto& [alpha, c] : terms) out.add(alpha, c);
  return out;
}

SuiteReport golden_examples(const VerifyOptions&) {
  SuiteReport report;
  auto same = [&](const QSymElement& got, const QSymElement& expected, const std::string& what) {
    report.expect(got.basis() == expected.basis() && got.terms() == expected.terms(),
                  [&] { return what + ": got " + to_string(got) + ", expected " + to_string(expected); });
  };

  same(f_to_m(basis_element(Basis::F, comp(1, {{2, 0}, {1, 0}}))),
       sum(Basis::M, {{comp(1, {{2, 0}, {1, 0}}), 1}, {comp(1, {{1, 0}, {1, 0}, {1, 0}}), 1}}), "F21 in M");
  same(f_to_m(basis_element(Basis::F, comp(2, {{1, 0}, {2, 1}, {1, 1}}))),
       sum(Basis::M, {{comp(2, {{1, 0}, {2, 1}, {1, 1}}), 1}, {comp(2, {{1, 0}, {1, 1}, {1, 1}, {1, 1}}), 1}}),
       "colored F expansion, m=2");
  same(f_to_m(basis_element(Basis::F, comp(3, {{2, 0}, {1, 2}, {2, 1}}))),
       sum(Basis::M, {{comp(3, {{2, 0}, {1, 2}, {2, 1}}), 1},
                      {comp(3, {{1, 0}, {1, 0}, {1, 2}, {2, 1}}), 1},
                      {comp(3, {{2, 0}, {1, 2}, {1, 1}, {1, 1}}), 1},
                      {comp(3, {{1, 0}, {1, 0}, {1, 2}, {1, 1}, {1, 1}}), 1}}),
       "colored F expansion, m=3");

  {
    const auto delta = coproduct(basis_element(Basis::M, comp(2, {{2, 1}, {1, 0}})));
    LinearCombination<CompositionPair> expected;
    expected.add({comp(2, {{2, 1}, {1, 0}}), comp(2, {})}, 1);
    expected.add({comp(2, {{2, 1}}), comp(2, {{1, 0}})}, 1);
    expected.add({comp(2, {}), comp(2, {{2, 1}, {1, 0}})}, 1);
    report.expect(delta.basis == Basis::M && delta.terms == expected, [] { return "coproduct of M(2^1,1)"; });
  }

  same(k_to_m(comp(2, {{2, 0}, {1, 0}, {1, 1}})),
       sum(Basis::M, {{comp(2, {{2, 0}, {1, 0}, {1, 1}}), 8},
                      {comp(2, {{1, 0}, {2, 0}, {1, 1}}), 8},
                      {comp(2, {{1, 0}, {1, 0}, {1, 0}, {1, 1}}), 16}}),
       "K(2,1,1^1) in M");

  {
    const auto classical = comp(1, {{3, 0}, {1, 0}, {1, 0}, {3, 0}, {2, 0}, {1, 0}, {1, 0}, {1, 0}});
    const auto colored = comp(2, {{3, 0}, {1, 0}, {1, 1}, {3, 1}, {2, 0}, {1, 1}, {1, 1}, {1, 0}});
    const auto classical_hat = comp(1, {{3, 0}, {5, 0}, {2, 0}, {3, 0}});
    const auto colored_hat = comp(2, {{3, 0}, {1, 0}, {4, 1}, {2, 0}, {2, 1}, {1, 0}});
    report.expect(hat(classical) == classical_hat, [&] { return "hat of " + show(classical); });
    report.expect(hat(colored) == colored_hat, [&] { return "hat of " + show(colored); });
    same(theta(basis_element(Basis::F, classical)), basis_element(Basis::K, classical_hat), "theta of F");
  }

  {
    const auto alpha = comp(3, {{1, 0}, {1, 2}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {4, 0}});
    const auto beta = comp(3, {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 2}, {2, 2}, {1, 1}, {1, 1}, {2, 1}, {1, 1},
                               {1, 2}, {1, 0}});
    report.expect(conjugate(alpha) == beta && conjugate(beta) == alpha, [] { return "conjugate pair"; });
    same(antipode(basis_element(Basis::F, alpha)), basis_element(Basis::F, beta), "antipode of F via conjugate");
  }

  {
    const auto left = poset(3, {{1, 1}, {5, 1}, {6, 0}, {2, 1}, {4, 2}, {3, 0}},
                            {{5, 1}, {1, 6}, {5, 4}, {4, 6}, {3, 4}, {6, 2}});
    const auto right = poset(3, {{3, 1}, {8, 1}, {9, 0}, {4, 1}, {6, 2}, {5, 0}},
                             {{8, 3}, {3, 9}, {8, 6}, {6, 9}, {5, 6}, {9, 4}});
    report.expect(equivalent(left, right), [] { return "equivalent colored posets judged inequivalent"; });
    const auto plain = poset(2, {{1, 0}, {2, 0}, {3, 0}}, {{2, 1}, {2, 3}});
    const auto tinted = poset(2, {{1, 0}, {2, 0}, {3, 1}}, {{2, 1}, {2, 3}});
    report.expect(!equivalent(plain, tinted), [] { return "inequivalent colored posets judged equivalent"; });
  }

  {
    const auto p = poset(1, {{1, 0}, {4, 0}, {5, 0}}, {{5, 1}, {5, 4}});
    auto got = linear_extensions(p);
    std::sort(got.begin(), got.end());
    std::vector<ColoredPermutation> expected{ColoredPermutation::classical({5, 1, 4}),
                                             ColoredPermutation::classical({5, 4, 1})};
    std::sort(expected.begin(), expected.end());
    report.expect(got == expected, [] { return "linear extensions of 1 > 5 < 4"; });
  }

  {
    const auto p = poset(1, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}, {{1, 4}, {3, 4}, {4, 2}});
    std::vector<std::vector<int>> got;
    for (const auto& ideal : ideals(p)) {
      std::vector<int> values;
      for (const auto& e : ideal.lower.elements()) values.push_back(e.value);
      got.push_back(values);
    }
    std::sort(got.begin(), got.end());
    const std::vector<std::vector<int>> expected{{}, {1}, {1, 2, 3, 4}, {1, 3}, {1, 3, 4}, {3}};
    report.expect(got == expected, [] { return "order ideals of {1<4, 3<4, 4<2}"; });
  }
  return report;
}

// ---------------------------------------------------------------------------

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

struct SuiteEntry {
  SuiteInfo info;
  SuiteFn run;
};

VerifyOptions grid(int colors, int max_size, int max_degree, int alphabet = 3) {
  VerifyOptions out;
  out.colors = colors;
  out.max_size = max_size;
  out.max_degree = max_degree;
  out.alphabet = alphabet;
  return out;
}

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {{"hopf-axioms", "counit, coassociativity, bialgebra, antipode identities on posets and on QSym (M basis)",
        grid(2, 5, 4)},
       hopf_axioms},
      {{"gamma-morphism", "gamma preserves unit, counit, product, coproduct, antipode", grid(2, 5, 4)},
       gamma_morphism},
      {{"lambda-morphism", "lambda preserves unit, counit, product, coproduct, antipode", grid(2, 5, 4)},
       lambda_morphism},
      {{"theta-morphism", "theta is a Hopf morphism F -> K and lambda = theta gamma", grid(2, 5, 4)},
       theta_morphism},
      {{"antipode-consistency", "closed, inductive and basis-change antipodes agree", grid(2, 4, 4)},
       antipode_consistency},
      {{"oracle-equivalence", "brute-force P-partition counts match gamma and lambda", grid(2, 4, 4, 3)},
       oracle_equivalence},
      {{"character-group", "zeta factorization, convolution inverses, oddness, multiplicativity", grid(2, 4, 4)},
       character_group},
      {{"nu-counting", "nu values match the peak-free extension counts", grid(2, 4, 4)}, nu_counting},
      {{"universality", "psi with the zeta and nu tuples recovers gamma and lambda", grid(2, 4, 4)}, universality},
      {{"dimension-counts", "graded dimensions of QSym and the peak algebra", grid(3, 0, 5)}, dimension_counts},
      {{"golden-examples", "worked examples reproduced exactly", grid(1, 0, 0)}, golden_examples},
  };
  return entries;
}

const SuiteEntry& entry(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e;
  }
  throw ParseError("suite", "unknown verification suite \"" + name + "\"");
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const SuiteInfo& suite_info(const std::string& name) { return entry(name).info; }

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  const auto& e = entry(name);
  if (options.colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
  if (options.max_size < 0 || options.max_degree < 0) throw InvariantError("grid-size", "grid sizes must be nonnegative");
  if (options.alphabet < 1) throw InvariantError("alphabet-size", "alphabet size must be at least 1");
  auto report = e.run(options);
  report.suite = name;
  report.options = options;
  return report;
}

std::vector<DimensionRow> dimension_rows(int colors, int max_n) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
  std::vector<DimensionRow> rows;
  const auto m = static_cast<std::uint64_t>(colors);
  std::uint64_t before = 0, last = 0;
  for (int n = 1; n <= max_n; ++n) {
    DimensionRow row;
    row.colors = colors;
    row.n = n;
    row.qsym_formula = m * power(m + 1, n - 1);
    const auto all = enumerate_compositions(colors, n);
    row.qsym_enumerated = all.size();
    row.peak_enumerated = static_cast<std::uint64_t>(std::count_if(all.begin(), all.end(), is_peak_composition));
    const std::uint64_t f = n == 1 ? m : n == 2 ? m * m : m * last + before;
    row.peak_recurrence = f;
    before = last;
    last = f;
    row.peak_rank = peak_span_rank(colors, n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cqsym
