#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "cqsym/combinat.hpp"
#include "cqsym/linear.hpp"
#include "cqsym/poset.hpp"

namespace cqsym {

/// Monomial, fundamental, and peak (K) functions.
enum class Basis { M, F, K };

std::string to_string(Basis basis);
Basis parse_basis(std::string_view text);

/// Element of the colored quasisymmetric functions, stored in one basis.
///
/// K-tagged elements only ever hold peak-composition keys; they live in the
/// colored peak subalgebra. Equality compares monomial expansions, so the
/// same function written in two bases compares equal.
class QSymElement {
 public:
  explicit QSymElement(int colors = 1, Basis basis = Basis::M);

  static QSymElement unit(int colors, Basis basis = Basis::M);
  static QSymElement basis_element(Basis basis, const ColoredComposition& alpha, const Rational& coeff = 1);

  int colors() const noexcept { return colors_; }
  Basis basis() const noexcept { return basis_; }
  const LinearCombination<ColoredComposition>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const ColoredComposition& alpha, const Rational& coeff);

  /// Degree-zero coefficient.
  Rational counit() const;

  /// Operands must share colors and basis.
  QSymElement& operator+=(const QSymElement& other);
  QSymElement& operator-=(const QSymElement& other);
  QSymElement& operator*=(const Rational& scale);

  friend bool operator==(const QSymElement& a, const QSymElement& b);

 private:
  int colors_;
  Basis basis_;
  LinearCombination<ColoredComposition> terms_;
};

QSymElement operator+(QSymElement a, const QSymElement& b);
QSymElement operator-(QSymElement a, const QSymElement& b);
QSymElement operator*(const Rational& scale, QSymElement a);

using CompositionPair = std::pair<ColoredComposition, ColoredComposition>;

/// Element of the tensor square, both factors in `basis`.
struct QSymTensor {
  int colors = 1;
  Basis basis = Basis::M;
  LinearCombination<CompositionPair> terms;
};

/// Compares monomial expansions of both factors.
bool tensor_equal(const QSymTensor& a, const QSymTensor& b);

// ---------------------------------------------------------------------------
// Basis changes

/// F_alpha = sum of M_beta over refinements beta of alpha.
QSymElement f_to_m(const QSymElement& element);
/// Inverse of f_to_m by Moebius inversion on the refinement order.
QSymElement m_to_f(const QSymElement& element);
/// Monomial expansion of K_alpha; alpha need not be a peak composition.
QSymElement k_to_m(const ColoredComposition& alpha);

QSymElement to_m(const QSymElement& element);
/// Converting into K solves within the peak subalgebra and throws
/// InvariantError("peak-span") for elements outside it.
QSymElement to_basis(const QSymElement& element, Basis target);

QSymTensor to_m(const QSymTensor& tensor);

/// Rank of the monomial expansions of the K_alpha over the peak
/// compositions alpha of n.
std::size_t peak_span_rank(int colors, int n);

// ---------------------------------------------------------------------------
// Hopf structure

/// F x F and K x K by shuffling representative chains; other pairs go
/// through F. The result is in the shared basis of the operands, or F.
QSymElement multiply(const QSymElement& a, const QSymElement& b);

/// Deconcatenation on M; chain splitting on F and K. Basis-preserving.
QSymTensor coproduct(const QSymElement& element);

/// Basis-preserving antipode.
QSymElement antipode(const QSymElement& element);

/// Sum of a_i * b_i over the terms a_i (x) b_i, in the tensor's basis.
QSymElement multiply_factors(const QSymTensor& tensor);

/// (a (x) b)(c (x) d) = ac (x) bd, computed in the M basis.
QSymTensor tensor_product(const QSymTensor& x, const QSymTensor& y);

/// F_alpha -> K_hat(alpha); M input is converted to F first.
QSymElement theta(const QSymElement& element);

/// Sum over linear extensions of F at the descent composition.
QSymElement gamma(const ColoredPoset& poset);
QSymElement gamma(const PosetAlgebraElement& element);

/// Sum over linear extensions of K at the peak composition.
QSymElement lambda(const ColoredPoset& poset);
QSymElement lambda(const PosetAlgebraElement& element);

std::string to_string(const QSymElement& element);
std::ostream& operator<<(std::ostream& os, const QSymElement& element);

}  // namespace cqsym
