#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqsym/combinat.hpp"
#include "cqsym/linear.hpp"

namespace cqsym {

/// Bit i refers to the i-th element of a poset in increasing value order.
using ElementMask = std::uint32_t;

/// Posets larger than this are rejected. Canonicalization is exponential in
/// the number of incomparable pairs; desk-scale work stays at n <= 8.
inline constexpr std::size_t kMaxPosetSize = 24;

/// A finite poset whose elements are colored letters with distinct values.
///
/// Elements are kept sorted by value; the strict order is stored as its
/// transitive closure (one mask of strictly smaller elements per element).
/// Covers are derived for serialization.
class ColoredPoset {
 public:
  ColoredPoset() = default;
  explicit ColoredPoset(int colors);

  /// `relations` holds value pairs (a, b) meaning a <_P b. Any generating
  /// set is accepted; the closure must be acyclic.
  ColoredPoset(int colors, std::vector<ColoredLetter> elements, const std::vector<std::pair<int, int>>& relations);

  /// The chain pi_1 < pi_2 < ... < pi_n.
  static ColoredPoset chain(const ColoredPermutation& pi);
  static ColoredPoset antichain(int colors, std::vector<ColoredLetter> elements);

  int colors() const noexcept { return colors_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<ColoredLetter>& elements() const noexcept { return elements_; }
  ElementMask full_mask() const noexcept;

  /// Elements strictly below element i.
  ElementMask below(std::size_t i) const { return below_[i]; }
  /// Elements strictly above element i.
  ElementMask above(std::size_t i) const;
  bool less(std::size_t i, std::size_t k) const { return (below_[k] >> i) & 1U; }
  bool comparable(std::size_t i, std::size_t k) const { return less(i, k) || less(k, i); }

  std::optional<std::size_t> index_of(int value) const;

  /// Covering relations as value pairs (a, b), a <_P b, sorted.
  std::vector<std::pair<int, int>> covers() const;

  /// Induced labeled subposet on `subset`.
  ColoredPoset restrict(ElementMask subset) const;

  bool is_ideal(ElementMask subset) const;

  auto operator<=>(const ColoredPoset&) const = default;

 private:
  friend ColoredPoset relabel(const ColoredPoset&, const std::vector<int>&);
  friend ColoredPoset canonical_form(const ColoredPoset&);
  friend ColoredPoset disjoint_union(const ColoredPoset&, const ColoredPoset&);
  friend std::vector<ColoredPoset> enumerate_labeled_posets(int, int);

  // Closure given directly; `elements` sorted by value.
  ColoredPoset(int colors, std::vector<ColoredLetter> elements, std::vector<ElementMask> below);

  int colors_ = 1;
  std::vector<ColoredLetter> elements_;
  std::vector<ElementMask> below_;
};

/// An order ideal together with the two induced labeled subposets.
struct Ideal {
  ElementMask mask = 0;
  ColoredPoset lower;
  ColoredPoset upper;
};

/// Down-closed subsets as masks, including the empty set and P.
std::vector<ElementMask> ideal_masks(const ColoredPoset& poset);
std::vector<Ideal> ideals(const ColoredPoset& poset);

std::vector<ColoredPermutation> linear_extensions(const ColoredPoset& poset);

/// Gives element i (in value order) the value new_values[i]. Colors and
/// order relations travel with the elements.
ColoredPoset relabel(const ColoredPoset& poset, const std::vector<int>& new_values);

/// Representative on values 1..n of the labeling-equivalence class: the
/// color- and order-preserving relabelings that keep the value order of
/// every comparable pair, minimized under a fixed row encoding.
ColoredPoset canonical_form(const ColoredPoset& poset);

bool equivalent(const ColoredPoset& a, const ColoredPoset& b);

/// Union with no relations between the parts. `right` is shifted above the
/// largest value of `left` when the value sets collide.
ColoredPoset disjoint_union(const ColoredPoset& left, const ColoredPoset& right);

/// The linear extension with no same-color descents and weakly increasing
/// colors, when it exists (it is unique).
std::optional<ColoredPermutation> natural_labeling_witness(const ColoredPoset& poset);
bool is_naturally_labeled(const ColoredPoset& poset);

/// Every element has color `color`; vacuous for the empty poset.
bool is_monochromatic(const ColoredPoset& poset, int color);

/// Every poset on the values 1..n with colors in [0, m), uncanonicalized.
std::vector<ColoredPoset> enumerate_labeled_posets(int colors, int n);

/// One canonical representative per equivalence class of (m, n)-posets.
std::vector<ColoredPoset> enumerate_canonical_posets(int colors, int n);

/// e.g. "{1 2^1 3 | 1<2 3<2}": elements in value order, then covers.
std::string to_string(const ColoredPoset& poset);
std::ostream& operator<<(std::ostream& os, const ColoredPoset& poset);

// ---------------------------------------------------------------------------
// The Hopf algebra of colored posets

/// Element of the colored poset algebra. Keys are canonical forms.
class PosetAlgebraElement {
 public:
  explicit PosetAlgebraElement(int colors = 1);

  static PosetAlgebraElement unit(int colors);
  static PosetAlgebraElement basis(const ColoredPoset& poset, const Rational& coeff = 1);

  int colors() const noexcept { return colors_; }
  const LinearCombination<ColoredPoset>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff * [poset], canonicalizing the key.
  void add(const ColoredPoset& poset, const Rational& coeff);
  /// Same, for keys the caller already canonicalized.
  void add_canonical(const ColoredPoset& poset, const Rational& coeff);

  /// Coefficient of the empty poset.
  Rational counit() const;

  PosetAlgebraElement& operator+=(const PosetAlgebraElement& other);
  PosetAlgebraElement& operator-=(const PosetAlgebraElement& other);
  PosetAlgebraElement& operator*=(const Rational& scale);

  friend bool operator==(const PosetAlgebraElement& a, const PosetAlgebraElement& b) {
    return a.colors_ == b.colors_ && a.terms_ == b.terms_;
  }

 private:
  int colors_;
  LinearCombination<ColoredPoset> terms_;
};

PosetAlgebraElement operator+(PosetAlgebraElement a, const PosetAlgebraElement& b);
PosetAlgebraElement operator-(PosetAlgebraElement a, const PosetAlgebraElement& b);
PosetAlgebraElement operator*(const Rational& scale, PosetAlgebraElement a);

using PosetPair = std::pair<ColoredPoset, ColoredPoset>;

struct PosetTensor {
  int colors = 1;
  LinearCombination<PosetPair> terms;

  friend bool operator==(const PosetTensor&, const PosetTensor&) = default;
};

/// Bilinear disjoint union.
PosetAlgebraElement product(const PosetAlgebraElement& a, const PosetAlgebraElement& b);

/// canonical_form(P disjoint-union Q) for canonical P, Q; memoized.
ColoredPoset product_basis(const ColoredPoset& left, const ColoredPoset& right);

/// Sum over order ideals I of I (x) (P \ I), both sides canonical.
PosetTensor coproduct(const PosetAlgebraElement& a);

/// (I, P \ I) pairs for a canonical basis poset; memoized.
const std::vector<PosetPair>& coproduct_basis(const ColoredPoset& canonical);

/// (a (x) b)(c (x) d) = ac (x) bd.
PosetTensor tensor_product(const PosetTensor& x, const PosetTensor& y);

enum class AntipodeMethod {
  inductive,     // S(P) = -P - sum over proper nonempty ideals S(I)(P \ I)
  ideal_chains,  // signed sum over strict ideal chains
};

PosetAlgebraElement antipode(const PosetAlgebraElement& a, AntipodeMethod method = AntipodeMethod::inductive);

}  // namespace cqsym
