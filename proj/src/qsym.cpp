#include "cqsym/qsym.hpp"

#include <map>
#include <mutex>
#include <ostream>

#include "cqsym/error.hpp"

namespace cqsym {

namespace {

using Terms = LinearCombination<ColoredComposition>;

void check_colors(int a, int b) {
  if (a != b) throw InvariantError("color-count-mismatch", "operands use different numbers of colors");
}

template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    cache_.try_emplace(key, value);
    return value;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> cache_;
};

std::vector<ColoredComposition> monochrome_compositions(int colors, int n, int color) {
  std::vector<ColoredComposition> out;
  for (const auto& alpha : enumerate_compositions(1, n)) {
    std::vector<int> sizes;
    for (const auto& part : alpha.parts()) sizes.push_back(part.size);
    out.push_back(ColoredComposition::monochrome(colors, sizes, color));
  }
  return out;
}

Terms k_to_m_terms(const ColoredComposition& alpha) {
  static Memo<ColoredComposition, Terms> memo;
  return memo.get(alpha, [&] {
    // Per rainbow block, the beta whose star refines the block, weighted by
    // 2^length; the blocks then combine freely.
    Terms out;
    out.add(ColoredComposition(alpha.colors(), {}), 1);
    for (const auto& block : rainbow_decompose(alpha).blocks) {
      const auto target = ColoredComposition::monochrome(alpha.colors(), block.sizes, block.color);
      Terms next;
      for (const auto& beta : monochrome_compositions(alpha.colors(), target.weight(), block.color)) {
        if (!refines(star(beta), target)) continue;
        const Rational weight = Rational(Integer(1) << static_cast<unsigned>(beta.length()));
        for (const auto& [prefix, coeff] : out) next.add(concat(prefix, beta), coeff * weight);
      }
      out = std::move(next);
    }
    return out;
  });
}

Terms f_product(const ColoredComposition& alpha, const ColoredComposition& beta) {
  static Memo<CompositionPair, Terms> memo;
  return memo.get({alpha, beta}, [&] {
    Terms out;
    const auto sigma = representative_chain(alpha);
    const auto tau = shift_values(representative_chain(beta), alpha.weight());
    for (const auto& pi : shuffles(sigma, tau)) out.add(descent_composition(pi), 1);
    return out;
  });
}

Terms k_product(const ColoredComposition& alpha, const ColoredComposition& beta) {
  static Memo<CompositionPair, Terms> memo;
  return memo.get({alpha, beta}, [&] {
    Terms out;
    const auto sigma = representative_chain(alpha);
    const auto tau = shift_values(representative_chain(beta), alpha.weight());
    for (const auto& pi : shuffles(sigma, tau)) out.add(peak_composition(pi), 1);
    return out;
  });
}

// Row-echelon form of the K_alpha monomial expansions in one degree. Each
// row remembers which combination of K_alpha produced it.
struct PeakEchelon {
  struct Row {
    ColoredComposition pivot;
    Terms expansion;
    Terms combination;
  };
  std::vector<Row> rows;

  // Reduces `expansion` in place; returns the K combination removed.
  Terms reduce(Terms& expansion) const {
    Terms removed;
    for (const auto& row : rows) {
      const Rational c = expansion.coefficient(row.pivot);
      if (c == 0) continue;
      const Rational scale = c / row.expansion.coefficient(row.pivot);
      expansion.add_scaled(row.expansion, -scale);
      removed.add_scaled(row.combination, scale);
    }
    return removed;
  }
};

const PeakEchelon& peak_echelon(int colors, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, PeakEchelon> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({colors, n}); it != cache.end()) return it->second;
  }
  PeakEchelon echelon;
  for (const auto& alpha : enumerate_peak_compositions(colors, n)) {
    Terms expansion = k_to_m_terms(alpha);
    Terms combination = Terms::single(alpha);
    combination.add_scaled(echelon.reduce(expansion), -1);
    if (expansion.empty()) continue;
    const auto pivot = expansion.begin()->first;
    echelon.rows.push_back({pivot, std::move(expansion), std::move(combination)});
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace({colors, n}, std::move(echelon)).first->second;
}

QSymElement m_to_k(const QSymElement& element) {
  std::map<int, Terms> by_degree;
  for (const auto& [alpha, coeff] : element.terms()) by_degree[alpha.weight()].add(alpha, coeff);
  QSymElement out(element.colors(), Basis::K);
  for (auto& [n, expansion] : by_degree) {
    const auto combination = peak_echelon(element.colors(), n).reduce(expansion);
    if (!expansion.empty()) {
      throw InvariantError("peak-span", "element is not in the span of the peak functions");
    }
    for (const auto& [alpha, coeff] : combination) out.add(alpha, coeff);
  }
  return out;
}

QSymElement from_terms(int colors, Basis basis, const Terms& terms) {
  QSymElement out(colors, basis);
  for (const auto& [alpha, coeff] : terms) out.add(alpha, coeff);
  return out;
}

}  // namespace

std::string to_string(Basis basis) {
  switch (basis) {
    case Basis::M:
      return "M";
    case Basis::F:
      return "F";
    case Basis::K:
      return "K";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  if (text == "M") return Basis::M;
  if (text == "F") return Basis::F;
  if (text == "K") return Basis::K;
  throw ParseError("basis", "unknown basis '" + std::string(text) + "', expected M, F or K");
}

// ---------------------------------------------------------------------------

QSymElement::QSymElement(int colors, Basis basis) : colors_(colors), basis_(basis) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
}

QSymElement QSymElement::unit(int colors, Basis basis) {
  QSymElement out(colors, basis);
  out.add(ColoredComposition(colors, {}), 1);
  return out;
}

QSymElement QSymElement::basis_element(Basis basis, const ColoredComposition& alpha, const Rational& coeff) {
  QSymElement out(alpha.colors(), basis);
  out.add(alpha, coeff);
  return out;
}

void QSymElement::add(const ColoredComposition& alpha, const Rational& coeff) {
  check_colors(colors_, alpha.colors());
  if (basis_ == Basis::K && !is_peak_composition(alpha)) {
    throw InvariantError("peak-composition", "K basis keys must be peak compositions, got " + to_string(alpha));
  }
  terms_.add(alpha, coeff);
}

// The empty key is 1 in every basis and is the only key of degree zero.
Rational QSymElement::counit() const { return terms_.coefficient(ColoredComposition(colors_, {})); }

QSymElement& QSymElement::operator+=(const QSymElement& other) {
  check_colors(colors_, other.colors_);
  if (basis_ != other.basis_) throw InvariantError("basis-mismatch", "operands are stored in different bases");
  terms_ += other.terms_;
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
  check_colors(colors_, other.colors_);
  if (basis_ != other.basis_) throw InvariantError("basis-mismatch", "operands are stored in different bases");
  terms_ -= other.terms_;
  return *this;
}

QSymElement& QSymElement::operator*=(const Rational& scale) {
  terms_ *= scale;
  return *this;
}

bool operator==(const QSymElement& a, const QSymElement& b) {
  if (a.colors_ != b.colors_) return false;
  if (a.basis_ == b.basis_) return a.terms_ == b.terms_;
  return to_m(a).terms_ == to_m(b).terms_;
}

QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
QSymElement operator*(const Rational& scale, QSymElement a) { return a *= scale; }

// ---------------------------------------------------------------------------

QSymElement f_to_m(const QSymElement& element) {
  if (element.basis() != Basis::F) throw InvariantError("basis", "f_to_m expects an F-basis element");
  QSymElement out(element.colors(), Basis::M);
  for (const auto& [alpha, coeff] : element.terms()) {
    for (const auto& beta : refinements(alpha)) out.add(beta, coeff);
  }
  return out;
}

QSymElement m_to_f(const QSymElement& element) {
  if (element.basis() != Basis::M) throw InvariantError("basis", "m_to_f expects an M-basis element");
  QSymElement out(element.colors(), Basis::F);
  for (const auto& [alpha, coeff] : element.terms()) {
    for (const auto& beta : refinements(alpha)) out.add(beta, coeff * sign_power(beta.length() - alpha.length()));
  }
  return out;
}

QSymElement k_to_m(const ColoredComposition& alpha) { return from_terms(alpha.colors(), Basis::M, k_to_m_terms(alpha)); }

QSymElement to_m(const QSymElement& element) {
  switch (element.basis()) {
    case Basis::M:
      return element;
    case Basis::F:
      return f_to_m(element);
    case Basis::K: {
      QSymElement out(element.colors(), Basis::M);
      for (const auto& [alpha, coeff] : element.terms()) {
        for (const auto& [beta, c] : k_to_m_terms(alpha)) out.add(beta, coeff * c);
      }
      return out;
    }
  }
  return element;
}

QSymElement to_basis(const QSymElement& element, Basis target) {
  if (element.basis() == target) return element;
  const auto monomial = to_m(element);
  switch (target) {
    case Basis::M:
      return monomial;
    case Basis::F:
      return m_to_f(monomial);
    case Basis::K:
      return m_to_k(monomial);
  }
  return monomial;
}

QSymTensor to_m(const QSymTensor& tensor) {
  if (tensor.basis == Basis::M) return tensor;
  QSymTensor out{tensor.colors, Basis::M, {}};
  for (const auto& [pair, coeff] : tensor.terms) {
    const auto left = to_m(QSymElement::basis_element(tensor.basis, pair.first));
    const auto right = to_m(QSymElement::basis_element(tensor.basis, pair.second));
    for (const auto& [a, ac] : left.terms()) {
      for (const auto& [b, bc] : right.terms()) out.terms.add({a, b}, coeff * ac * bc);
    }
  }
  return out;
}

bool tensor_equal(const QSymTensor& a, const QSymTensor& b) {
  if (a.colors != b.colors) return false;
  if (a.basis == b.basis) return a.terms == b.terms;
  return to_m(a).terms == to_m(b).terms;
}

std::size_t peak_span_rank(int colors, int n) { return peak_echelon(colors, n).rows.size(); }

// ---------------------------------------------------------------------------

QSymElement multiply(const QSymElement& a, const QSymElement& b) {
  check_colors(a.colors(), b.colors());
  if (a.basis() == Basis::K && b.basis() == Basis::K) {
    QSymElement out(a.colors(), Basis::K);
    for (const auto& [alpha, ac] : a.terms()) {
      for (const auto& [beta, bc] : b.terms()) {
        for (const auto& [gamma, c] : k_product(alpha, beta)) out.add(gamma, ac * bc * c);
      }
    }
    return out;
  }
  const auto fa = to_basis(a, Basis::F);
  const auto fb = to_basis(b, Basis::F);
  QSymElement out(a.colors(), Basis::F);
  for (const auto& [alpha, ac] : fa.terms()) {
    for (const auto& [beta, bc] : fb.terms()) {
      for (const auto& [gamma, c] : f_product(alpha, beta)) out.add(gamma, ac * bc * c);
    }
  }
  return a.basis() == b.basis() ? to_basis(out, a.basis()) : out;
}

QSymTensor coproduct(const QSymElement& element) {
  QSymTensor out{element.colors(), element.basis(), {}};
  for (const auto& [alpha, coeff] : element.terms()) {
    if (element.basis() == Basis::M) {
      const auto& parts = alpha.parts();
      for (std::size_t i = 0; i <= parts.size(); ++i) {
        out.terms.add({ColoredComposition(alpha.colors(), {parts.begin(), parts.begin() + static_cast<long>(i)}),
                       ColoredComposition(alpha.colors(), {parts.begin() + static_cast<long>(i), parts.end()})},
                      coeff);
      }
      continue;
    }
    const auto chain = representative_chain(alpha);
    const auto statistic = element.basis() == Basis::F ? descent_composition : peak_composition;
    for (std::size_t i = 0; i <= chain.size(); ++i) {
      out.terms.add({statistic(chain.slice(0, i)), statistic(chain.slice(i, chain.size()))}, coeff);
    }
  }
  return out;
}

QSymElement antipode(const QSymElement& element) {
  QSymElement out(element.colors(), element.basis());
  for (const auto& [alpha, coeff] : element.terms()) {
    switch (element.basis()) {
      case Basis::M:
        for (const auto& beta : coarsenings(alpha)) out.add(reverse(beta), coeff * sign_power(alpha.length()));
        break;
      case Basis::F:
        out.add(conjugate(alpha), coeff * sign_power(static_cast<std::size_t>(alpha.weight())));
        break;
      case Basis::K:
        out.add(peak_composition(reverse_word(representative_chain(alpha))),
                coeff * sign_power(static_cast<std::size_t>(alpha.weight())));
        break;
    }
  }
  return out;
}

QSymElement multiply_factors(const QSymTensor& tensor) {
  QSymElement out(tensor.colors, tensor.basis);
  for (const auto& [pair, coeff] : tensor.terms) {
    const auto product = multiply(QSymElement::basis_element(tensor.basis, pair.first, coeff),
                                  QSymElement::basis_element(tensor.basis, pair.second));
    out += to_basis(product, tensor.basis);
  }
  return out;
}

QSymTensor tensor_product(const QSymTensor& x, const QSymTensor& y) {
  check_colors(x.colors, y.colors);
  const auto mx = to_m(x);
  const auto my = to_m(y);
  QSymTensor out{x.colors, Basis::M, {}};
  for (const auto& [a, ac] : mx.terms) {
    for (const auto& [b, bc] : my.terms) {
      const auto left = multiply(QSymElement::basis_element(Basis::M, a.first), QSymElement::basis_element(Basis::M, b.first));
      const auto right =
          multiply(QSymElement::basis_element(Basis::M, a.second), QSymElement::basis_element(Basis::M, b.second));
      for (const auto& [l, lc] : left.terms()) {
        for (const auto& [r, rc] : right.terms()) out.terms.add({l, r}, ac * bc * lc * rc);
      }
    }
  }
  return out;
}

QSymElement theta(const QSymElement& element) {
  const auto fundamental = to_basis(element, Basis::F);
  QSymElement out(element.colors(), Basis::K);
  for (const auto& [alpha, coeff] : fundamental.terms()) out.add(hat(alpha), coeff);
  return out;
}

QSymElement gamma(const ColoredPoset& poset) {
  QSymElement out(poset.colors(), Basis::F);
  for (const auto& pi : linear_extensions(poset)) out.add(descent_composition(pi), 1);
  return out;
}

QSymElement gamma(const PosetAlgebraElement& element) {
  QSymElement out(element.colors(), Basis::F);
  for (const auto& [poset, coeff] : element.terms()) out += coeff * gamma(poset);
  return out;
}

QSymElement lambda(const ColoredPoset& poset) {
  QSymElement out(poset.colors(), Basis::K);
  for (const auto& pi : linear_extensions(poset)) out.add(peak_composition(pi), 1);
  return out;
}

QSymElement lambda(const PosetAlgebraElement& element) {
  QSymElement out(element.colors(), Basis::K);
  for (const auto& [poset, coeff] : element.terms()) out += coeff * lambda(poset);
  return out;
}

std::string to_string(const QSymElement& element) {
  if (element.is_zero()) return "0";
  std::string out;
  const auto name = to_string(element.basis());
  for (const auto& [alpha, coeff] : element.terms()) {
    if (!out.empty()) out += coeff < 0 ? " - " : " + ";
    else if (coeff < 0) out += "-";
    const Rational magnitude = abs(coeff);
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += name + to_string(alpha);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QSymElement& element) { return os << to_string(element); }

}  // namespace cqsym
