#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace cqsym {

/// A part of a colored composition: a positive size carrying a color in
/// [0, m). Color j stands for the formal marker omega^j.
struct ColoredPart {
  int size = 0;
  int color = 0;

  auto operator<=>(const ColoredPart&) const = default;
};

/// A letter of a colored permutation, also the element type of colored
/// posets. The ambient total order on letters compares values first and
/// colors second; letters of one word or poset never share a value.
struct ColoredLetter {
  int value = 0;
  int color = 0;

  auto operator<=>(const ColoredLetter&) const = default;
};

/// An m-colored composition. Indexes every basis element of the colored
/// quasisymmetric functions.
class ColoredComposition {
 public:
  ColoredComposition() = default;
  ColoredComposition(int colors, std::vector<ColoredPart> parts);

  /// Monochromatic composition in color `color` from plain sizes.
  static ColoredComposition monochrome(int colors, const std::vector<int>& sizes, int color = 0);
  /// Uncolored (m = 1) composition.
  static ColoredComposition classical(std::initializer_list<int> sizes);

  int colors() const noexcept { return colors_; }
  int weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
  const ColoredPart& operator[](std::size_t i) const { return parts_[i]; }

  // Orders by color count, then weight, then parts lexicographically.
  auto operator<=>(const ColoredComposition&) const = default;

 private:
  int colors_ = 1;
  int weight_ = 0;
  std::vector<ColoredPart> parts_;
};

/// Word of colored letters with distinct values.
class ColoredPermutation {
 public:
  ColoredPermutation() = default;
  ColoredPermutation(int colors, std::vector<ColoredLetter> letters);

  static ColoredPermutation classical(std::initializer_list<int> values);

  int colors() const noexcept { return colors_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<ColoredLetter>& letters() const noexcept { return letters_; }
  const ColoredLetter& operator[](std::size_t i) const { return letters_[i]; }

  /// Letters [begin, end) as a word in their own right.
  ColoredPermutation slice(std::size_t begin, std::size_t end) const;

  auto operator<=>(const ColoredPermutation&) const = default;

 private:
  int colors_ = 1;
  std::vector<ColoredLetter> letters_;
};

/// One maximal same-color run of a colored composition.
struct RainbowBlock {
  std::vector<int> sizes;
  int color = 0;

  auto operator<=>(const RainbowBlock&) const = default;
};

struct RainbowDecomposition {
  int colors = 1;
  std::vector<RainbowBlock> blocks;

  /// Concatenates the blocks back into a colored composition.
  ColoredComposition join() const;
};

// ---------------------------------------------------------------------------
// Compositions

/// True iff `fine` is obtained from `coarse` by splitting parts into
/// same-colored pieces (coarse <= fine in refinement order).
bool refines(const ColoredComposition& fine, const ColoredComposition& coarse);

/// All beta with refines(alpha, beta), including alpha. Sorted.
std::vector<ColoredComposition> coarsenings(const ColoredComposition& alpha);

/// All beta with refines(beta, alpha), including alpha. Sorted.
std::vector<ColoredComposition> refinements(const ColoredComposition& alpha);

ColoredComposition concat(const ColoredComposition& left, const ColoredComposition& right);
ColoredComposition reverse(const ColoredComposition& alpha);

/// Splits every non-initial part of size >= 2 of each rainbow block into
/// (1, size - 1) of the same color.
ColoredComposition star(const ColoredComposition& beta);

/// Collapses each run of same-colored 1s into the next part of its block
/// (or into a single trailing part). Always yields a peak composition.
ColoredComposition hat(const ColoredComposition& alpha);

/// Every rainbow block has all parts except possibly its last greater than 1.
bool is_peak_composition(const ColoredComposition& alpha);

RainbowDecomposition rainbow_decompose(const ColoredComposition& alpha);

/// Cycloribbon conjugate: C(reversed word) for any word with descent
/// composition alpha.
ColoredComposition conjugate(const ColoredComposition& alpha);

/// All m-colored compositions of n, sorted. The single empty composition
/// for n = 0.
std::vector<ColoredComposition> enumerate_compositions(int colors, int n);

/// Peak compositions among enumerate_compositions(colors, n).
std::vector<ColoredComposition> enumerate_peak_compositions(int colors, int n);

/// f_{m,n} = m f_{m,n-1} + f_{m,n-2}, f_{m,1} = m, f_{m,2} = m^2.
std::uint64_t count_peak_compositions(int colors, int n);

/// m (m + 1)^(n - 1) for n >= 1, 1 for n = 0.
std::uint64_t count_compositions(int colors, int n);

// ---------------------------------------------------------------------------
// Permutations

/// Lengths of maximal constant-color increasing runs, each tagged with the
/// run's color.
ColoredComposition descent_composition(const ColoredPermutation& pi);

/// Positions (1-based) of same-color descents.
std::vector<int> descent_set(const ColoredPermutation& pi);

/// Concatenation over constant-color runs of the classical peak composition
/// of each run.
ColoredComposition peak_composition(const ColoredPermutation& pi);

/// Positions (1-based, within the whole word) of interior peaks of the
/// constant-color runs.
std::vector<int> peak_set(const ColoredPermutation& pi);

ColoredPermutation reverse_word(const ColoredPermutation& pi);

/// Replaces values by their ranks, keeping colors.
ColoredPermutation standardize(const ColoredPermutation& pi);

/// Adds `offset` to every value.
ColoredPermutation shift_values(const ColoredPermutation& pi, int offset);

/// All interleavings of two words on disjoint values.
std::vector<ColoredPermutation> shuffles(const ColoredPermutation& sigma, const ColoredPermutation& tau);

/// A word on 1..n with descent_composition equal to alpha. Runs are filled
/// right to left with increasing value blocks, so every run boundary is a
/// value drop. When alpha is a peak composition the word also has
/// peak_composition equal to alpha.
ColoredPermutation representative_chain(const ColoredComposition& alpha);

/// Every colored permutation of 1..n with colors in [0, m).
std::vector<ColoredPermutation> enumerate_permutations(int colors, int n);

// ---------------------------------------------------------------------------
// Cycloribbon diagrams (rendering and diagram-level conjugation)

struct CycloribbonCell {
  int x = 0;  // column, growing to the right
  int y = 0;  // row height, growing upwards
  int color = 0;

  auto operator<=>(const CycloribbonCell&) const = default;
};

/// Cells of the cycloribbon diagram of alpha; the last cell sits at y = 0.
std::vector<CycloribbonCell> cycloribbon(const ColoredComposition& alpha);

/// Reads a composition back from cells: rows top to bottom, each row split
/// at color changes.
ColoredComposition read_cycloribbon(int colors, const std::vector<CycloribbonCell>& cells);

/// Reflects the diagram across y = x.
std::vector<CycloribbonCell> transpose(const std::vector<CycloribbonCell>& cells);

/// Text grid, one line per row, colors as digits and blanks as '.'.
std::string render_cycloribbon(const ColoredComposition& alpha);

// ---------------------------------------------------------------------------

std::string to_string(const ColoredComposition& alpha);
std::string to_string(const ColoredPermutation& pi);
std::ostream& operator<<(std::ostream& os, const ColoredComposition& alpha);
std::ostream& operator<<(std::ostream& os, const ColoredPermutation& pi);

}  // namespace cqsym
