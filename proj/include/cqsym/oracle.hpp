#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cqsym/poset.hpp"
#include "cqsym/qsym.hpp"

namespace cqsym {

/// x_{index, color}^exponent
struct VariablePower {
  int index = 1;
  int color = 0;
  int exponent = 1;
  auto operator<=>(const VariablePower&) const = default;
};

/// Polynomial in the variables x_{i,j}, 1 <= i <= N, 0 <= j < m.
///
/// Monomials are dense exponent vectors; x_{i,j} sits at (i - 1) * m + j.
class TruncatedPolynomial {
 public:
  using Exponents = std::vector<int>;

  TruncatedPolynomial(int alphabet_size, int colors);

  int alphabet_size() const noexcept { return alphabet_size_; }
  int colors() const noexcept { return colors_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::size_t variable(int index, int color) const;
  Exponents one() const { return Exponents(static_cast<std::size_t>(alphabet_size_ * colors_), 0); }
  Exponents monomial(const std::vector<VariablePower>& powers) const;
  std::vector<VariablePower> powers(const Exponents& exponents) const;

  void add(const Exponents& exponents, const Rational& coeff);
  Rational coefficient(const std::vector<VariablePower>& powers) const;
  /// Sum of all coefficients: the number of maps for an oracle count.
  Rational total() const;

  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

 private:
  int alphabet_size_;
  int colors_;
  std::map<Exponents, Rational> terms_;
};

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/// Moves x_{i,j} to x_{i + offset, j} in an alphabet of `alphabet_size`.
TruncatedPolynomial shift_alphabet(const TruncatedPolynomial& p, int offset, int alphabet_size);

std::string to_string(const TruncatedPolynomial& p);

/// Sum of x_f over the colored P-partitions f into [N]_m: color-preserving,
/// weakly order-preserving, strict where P inverts the label order.
TruncatedPolynomial enumerate_ppartitions(const ColoredPoset& poset, int alphabet_size);

/// Sum of x_|f| over the colored enriched P-partitions into the signed
/// alphabet on [N]_m, ordered by (index, color, sign) with -s before s.
TruncatedPolynomial enumerate_enriched(const ColoredPoset& poset, int alphabet_size);

/// Restriction of a quasisymmetric function to first indices <= N.
TruncatedPolynomial truncate(const QSymElement& element, int alphabet_size);

/// Both sides of the splitting of P-partitions into X followed by Y.
struct SplitAlphabetReport {
  Rational whole_count;  // P-partitions into X + Y
  Rational split_count;  // sum over ideals I of |A(I; X)| |A(P \ I; Y)|
  bool polynomials_equal = false;
  bool holds() const { return polynomials_equal && whole_count == split_count; }
};

/// X and Y each have N indices; Y's index i is stored as N + i.
SplitAlphabetReport split_alphabet_report(const ColoredPoset& poset, int alphabet_size);
bool split_alphabet_check(const ColoredPoset& poset, int alphabet_size);

}  // namespace cqsym
