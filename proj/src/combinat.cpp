#include "cqsym/combinat.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "cqsym/error.hpp"

namespace cqsym {

namespace {

void check_color_count(int colors) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
}

void check_same_colors(int a, int b) {
  if (a != b) {
    throw InvariantError("color-count-mismatch",
                         "operands use " + std::to_string(a) + " and " + std::to_string(b) + " colors");
  }
}

// All compositions of n as plain size lists.
void plain_compositions(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    prefix.push_back(first);
    plain_compositions(n - first, prefix, out);
    prefix.pop_back();
  }
}

// Classical peak composition of a word of distinct values.
std::vector<int> classical_peak_parts(const std::vector<int>& word) {
  std::vector<int> parts;
  int last = 0;
  for (std::size_t p = 1; p + 1 < word.size(); ++p) {
    if (word[p - 1] < word[p] && word[p] > word[p + 1]) {
      const int position = static_cast<int>(p) + 1;
      parts.push_back(position - last);
      last = position;
    }
  }
  if (!word.empty()) parts.push_back(static_cast<int>(word.size()) - last);
  return parts;
}

std::vector<int> classical_hat(const std::vector<int>& sizes) {
  std::vector<int> out;
  int pending = 0;
  for (int size : sizes) {
    if (size == 1) {
      ++pending;
    } else {
      out.push_back(size + pending);
      pending = 0;
    }
  }
  if (pending > 0) out.push_back(pending);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

ColoredComposition::ColoredComposition(int colors, std::vector<ColoredPart> parts)
    : colors_(colors), parts_(std::move(parts)) {
  check_color_count(colors_);
  for (const auto& part : parts_) {
    if (part.size < 1) throw InvariantError("part-size", "composition parts must be positive");
    if (part.color < 0 || part.color >= colors_) {
      throw InvariantError("color-range", "part color " + std::to_string(part.color) + " outside [0, " +
                                              std::to_string(colors_) + ")");
    }
    weight_ += part.size;
  }
}

ColoredComposition ColoredComposition::monochrome(int colors, const std::vector<int>& sizes, int color) {
  std::vector<ColoredPart> parts;
  parts.reserve(sizes.size());
  for (int size : sizes) parts.push_back({size, color});
  return ColoredComposition(colors, std::move(parts));
}

ColoredComposition ColoredComposition::classical(std::initializer_list<int> sizes) {
  return monochrome(1, std::vector<int>(sizes), 0);
}

ColoredPermutation::ColoredPermutation(int colors, std::vector<ColoredLetter> letters)
    : colors_(colors), letters_(std::move(letters)) {
  check_color_count(colors_);
  std::set<int> seen;
  for (const auto& letter : letters_) {
    if (letter.value < 1) throw InvariantError("letter-value", "letter values must be positive");
    if (letter.color < 0 || letter.color >= colors_) {
      throw InvariantError("color-range", "letter color " + std::to_string(letter.color) + " outside [0, " +
                                              std::to_string(colors_) + ")");
    }
    if (!seen.insert(letter.value).second) {
      throw InvariantError("distinct-values", "value " + std::to_string(letter.value) + " repeated");
    }
  }
}

ColoredPermutation ColoredPermutation::classical(std::initializer_list<int> values) {
  std::vector<ColoredLetter> letters;
  for (int v : values) letters.push_back({v, 0});
  return ColoredPermutation(1, std::move(letters));
}

ColoredPermutation ColoredPermutation::slice(std::size_t begin, std::size_t end) const {
  return ColoredPermutation(colors_, std::vector<ColoredLetter>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                                letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

ColoredComposition RainbowDecomposition::join() const {
  std::vector<ColoredPart> parts;
  for (const auto& block : blocks) {
    for (int size : block.sizes) parts.push_back({size, block.color});
  }
  return ColoredComposition(colors, std::move(parts));
}

// ---------------------------------------------------------------------------
// Compositions

bool refines(const ColoredComposition& fine, const ColoredComposition& coarse) {
  check_same_colors(fine.colors(), coarse.colors());
  if (fine.weight() != coarse.weight()) return false;
  std::size_t i = 0;
  for (const auto& part : coarse.parts()) {
    int sum = 0;
    while (sum < part.size) {
      if (i >= fine.length() || fine[i].color != part.color) return false;
      sum += fine[i].size;
      ++i;
    }
    if (sum != part.size) return false;
  }
  return i == fine.length();
}

std::vector<ColoredComposition> coarsenings(const ColoredComposition& alpha) {
  // Each gap between two adjacent same-colored parts merges independently.
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    if (alpha[i].color == alpha[i + 1].color) gaps.push_back(i);
  }
  std::vector<ColoredComposition> out;
  out.reserve(std::size_t{1} << gaps.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gaps.size()); ++mask) {
    std::vector<bool> merge_after(alpha.length(), false);
    for (std::size_t g = 0; g < gaps.size(); ++g) {
      if (mask & (std::uint64_t{1} << g)) merge_after[gaps[g]] = true;
    }
    std::vector<ColoredPart> parts;
    for (std::size_t i = 0; i < alpha.length(); ++i) {
      if (i > 0 && merge_after[i - 1]) {
        parts.back().size += alpha[i].size;
      } else {
        parts.push_back(alpha[i]);
      }
    }
    out.emplace_back(alpha.colors(), std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColoredComposition> refinements(const ColoredComposition& alpha) {
  std::vector<std::vector<ColoredPart>> partial{{}};
  for (const auto& part : alpha.parts()) {
    std::vector<std::vector<int>> splits;
    std::vector<int> prefix;
    plain_compositions(part.size, prefix, splits);
    std::vector<std::vector<ColoredPart>> next;
    next.reserve(partial.size() * splits.size());
    for (const auto& head : partial) {
      for (const auto& split : splits) {
        auto extended = head;
        for (int size : split) extended.push_back({size, part.color});
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::vector<ColoredComposition> out;
  out.reserve(partial.size());
  for (auto& parts : partial) out.emplace_back(alpha.colors(), std::move(parts));
  std::sort(out.begin(), out.end());
  return out;
}

ColoredComposition concat(const ColoredComposition& left, const ColoredComposition& right) {
  check_same_colors(left.colors(), right.colors());
  auto parts = left.parts();
  parts.insert(parts.end(), right.parts().begin(), right.parts().end());
  return ColoredComposition(left.colors(), std::move(parts));
}

ColoredComposition reverse(const ColoredComposition& alpha) {
  auto parts = alpha.parts();
  std::reverse(parts.begin(), parts.end());
  return ColoredComposition(alpha.colors(), std::move(parts));
}

ColoredComposition star(const ColoredComposition& beta) {
  RainbowDecomposition blocks = rainbow_decompose(beta);
  for (auto& block : blocks.blocks) {
    std::vector<int> sizes;
    for (std::size_t i = 0; i < block.sizes.size(); ++i) {
      if (i > 0 && block.sizes[i] >= 2) {
        sizes.push_back(1);
        sizes.push_back(block.sizes[i] - 1);
      } else {
        sizes.push_back(block.sizes[i]);
      }
    }
    block.sizes = std::move(sizes);
  }
  return blocks.join();
}

ColoredComposition hat(const ColoredComposition& alpha) {
  RainbowDecomposition blocks = rainbow_decompose(alpha);
  for (auto& block : blocks.blocks) block.sizes = classical_hat(block.sizes);
  return blocks.join();
}

bool is_peak_composition(const ColoredComposition& alpha) {
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    if (alpha[i].color == alpha[i + 1].color && alpha[i].size == 1) return false;
  }
  return true;
}

RainbowDecomposition rainbow_decompose(const ColoredComposition& alpha) {
  RainbowDecomposition out;
  out.colors = alpha.colors();
  for (const auto& part : alpha.parts()) {
    if (out.blocks.empty() || out.blocks.back().color != part.color) {
      out.blocks.push_back({{}, part.color});
    }
    out.blocks.back().sizes.push_back(part.size);
  }
  return out;
}

ColoredComposition conjugate(const ColoredComposition& alpha) {
  if (alpha.empty()) return alpha;
  return descent_composition(reverse_word(representative_chain(alpha)));
}

std::vector<ColoredComposition> enumerate_compositions(int colors, int n) {
  check_color_count(colors);
  if (n < 0) throw InvariantError("weight", "composition weight must be nonnegative");
  std::vector<ColoredComposition> out;
  std::vector<ColoredPart> prefix;
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(colors, prefix);
      return;
    }
    for (int size = 1; size <= remaining; ++size) {
      for (int color = 0; color < colors; ++color) {
        prefix.push_back({size, color});
        self(self, remaining - size);
        prefix.pop_back();
      }
    }
  };
  recurse(recurse, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColoredComposition> enumerate_peak_compositions(int colors, int n) {
  auto all = enumerate_compositions(colors, n);
  std::vector<ColoredComposition> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out),
               [](const ColoredComposition& a) { return is_peak_composition(a); });
  return out;
}

std::uint64_t count_peak_compositions(int colors, int n) {
  check_color_count(colors);
  if (n < 0) throw InvariantError("weight", "composition weight must be nonnegative");
  if (n == 0) return 1;
  const auto m = static_cast<std::uint64_t>(colors);
  std::uint64_t previous = m;      // f_{m,1}
  std::uint64_t current = m * m;   // f_{m,2}
  if (n == 1) return previous;
  for (int k = 3; k <= n; ++k) {
    std::uint64_t scaled = 0;
    std::uint64_t next = 0;
    if (__builtin_mul_overflow(m, current, &scaled) || __builtin_add_overflow(scaled, previous, &next)) {
      throw InvariantError("overflow", "peak composition count exceeds 64 bits");
    }
    previous = current;
    current = next;
  }
  return current;
}

std::uint64_t count_compositions(int colors, int n) {
  check_color_count(colors);
  if (n <= 0) return 1;
  std::uint64_t out = static_cast<std::uint64_t>(colors);
  for (int k = 1; k < n; ++k) {
    if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(colors) + 1, &out)) {
      throw InvariantError("overflow", "composition count exceeds 64 bits");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutations

ColoredComposition descent_composition(const ColoredPermutation& pi) {
  std::vector<ColoredPart> parts;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    const bool continues_run =
        i > 0 && pi[i].color == pi[i - 1].color && pi[i].value > pi[i - 1].value;
    if (continues_run) {
      ++parts.back().size;
    } else {
      parts.push_back({1, pi[i].color});
    }
  }
  return ColoredComposition(pi.colors(), std::move(parts));
}

std::vector<int> descent_set(const ColoredPermutation& pi) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    if (pi[i].color == pi[i + 1].color && pi[i].value > pi[i + 1].value) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

ColoredComposition peak_composition(const ColoredPermutation& pi) {
  std::vector<ColoredPart> parts;
  std::size_t start = 0;
  while (start < pi.size()) {
    std::size_t end = start;
    std::vector<int> run;
    while (end < pi.size() && pi[end].color == pi[start].color) run.push_back(pi[end++].value);
    for (int size : classical_peak_parts(run)) parts.push_back({size, pi[start].color});
    start = end;
  }
  return ColoredComposition(pi.colors(), std::move(parts));
}

std::vector<int> peak_set(const ColoredPermutation& pi) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < pi.size(); ++i) {
    const bool same_color = pi[i - 1].color == pi[i].color && pi[i].color == pi[i + 1].color;
    if (same_color && pi[i - 1].value < pi[i].value && pi[i].value > pi[i + 1].value) {
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

ColoredPermutation reverse_word(const ColoredPermutation& pi) {
  auto letters = pi.letters();
  std::reverse(letters.begin(), letters.end());
  return ColoredPermutation(pi.colors(), std::move(letters));
}

ColoredPermutation standardize(const ColoredPermutation& pi) {
  std::vector<int> values;
  values.reserve(pi.size());
  for (const auto& letter : pi.letters()) values.push_back(letter.value);
  std::sort(values.begin(), values.end());
  auto letters = pi.letters();
  for (auto& letter : letters) {
    letter.value = static_cast<int>(std::lower_bound(values.begin(), values.end(), letter.value) - values.begin()) + 1;
  }
  return ColoredPermutation(pi.colors(), std::move(letters));
}

ColoredPermutation shift_values(const ColoredPermutation& pi, int offset) {
  auto letters = pi.letters();
  for (auto& letter : letters) letter.value += offset;
  return ColoredPermutation(pi.colors(), std::move(letters));
}

std::vector<ColoredPermutation> shuffles(const ColoredPermutation& sigma, const ColoredPermutation& tau) {
  check_same_colors(sigma.colors(), tau.colors());
  std::set<int> values;
  for (const auto& letter : sigma.letters()) values.insert(letter.value);
  for (const auto& letter : tau.letters()) {
    if (values.count(letter.value)) {
      throw InvariantError("disjoint-values", "shuffled words share value " + std::to_string(letter.value));
    }
  }
  std::vector<ColoredPermutation> out;
  std::vector<ColoredLetter> word;
  word.reserve(sigma.size() + tau.size());
  auto recurse = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == sigma.size() && j == tau.size()) {
      out.emplace_back(sigma.colors(), word);
      return;
    }
    if (i < sigma.size()) {
      word.push_back(sigma[i]);
      self(self, i + 1, j);
      word.pop_back();
    }
    if (j < tau.size()) {
      word.push_back(tau[j]);
      self(self, i, j + 1);
      word.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

ColoredPermutation representative_chain(const ColoredComposition& alpha) {
  std::vector<ColoredLetter> letters;
  letters.reserve(static_cast<std::size_t>(alpha.weight()));
  int after = alpha.weight();
  for (const auto& part : alpha.parts()) {
    after -= part.size;
    for (int k = 1; k <= part.size; ++k) letters.push_back({after + k, part.color});
  }
  return ColoredPermutation(alpha.colors(), std::move(letters));
}

std::vector<ColoredPermutation> enumerate_permutations(int colors, int n) {
  check_color_count(colors);
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::size_t colorings = 1;
  for (int i = 0; i < n; ++i) colorings *= static_cast<std::size_t>(colors);
  std::vector<ColoredPermutation> out;
  do {
    for (std::size_t code = 0; code < colorings; ++code) {
      std::vector<ColoredLetter> letters;
      std::size_t rest = code;
      for (int v : values) {
        letters.push_back({v, static_cast<int>(rest % static_cast<std::size_t>(colors))});
        rest /= static_cast<std::size_t>(colors);
      }
      out.emplace_back(colors, std::move(letters));
    }
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Cycloribbons

std::vector<CycloribbonCell> cycloribbon(const ColoredComposition& alpha) {
  std::vector<CycloribbonCell> cells;
  int x = 0;
  int y = 0;
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (i > 0) {
      if (alpha[i - 1].color < alpha[i].color) {
        ++x;  // extend the current row
      } else {
        --y;  // start below the last square
      }
    }
    for (int k = 0; k < alpha[i].size; ++k) {
      if (k > 0) ++x;
      cells.push_back({x, y, alpha[i].color});
    }
  }
  for (auto& cell : cells) cell.y -= y;
  return cells;
}

ColoredComposition read_cycloribbon(int colors, const std::vector<CycloribbonCell>& cells) {
  std::map<int, std::vector<CycloribbonCell>, std::greater<>> rows;
  for (const auto& cell : cells) rows[cell.y].push_back(cell);
  std::vector<ColoredPart> parts;
  for (auto& [y, row] : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0 && row[k].color == row[k - 1].color) {
        ++parts.back().size;
      } else {
        parts.push_back({1, row[k].color});
      }
    }
  }
  return ColoredComposition(colors, std::move(parts));
}

std::vector<CycloribbonCell> transpose(const std::vector<CycloribbonCell>& cells) {
  std::vector<CycloribbonCell> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) out.push_back({cell.y, cell.x, cell.color});
  return out;
}

std::string render_cycloribbon(const ColoredComposition& alpha) {
  const auto cells = cycloribbon(alpha);
  if (cells.empty()) return "";
  int width = 0;
  int height = 0;
  for (const auto& cell : cells) {
    width = std::max(width, cell.x + 1);
    height = std::max(height, cell.y + 1);
  }
  std::vector<std::string> grid(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), '.'));
  for (const auto& cell : cells) {
    const char mark = cell.color < 10 ? static_cast<char>('0' + cell.color) : '#';
    grid[static_cast<std::size_t>(height - 1 - cell.y)][static_cast<std::size_t>(cell.x)] = mark;
  }
  std::string out;
  for (const auto& line : grid) out += line + '\n';
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const ColoredComposition& alpha) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (i > 0) os << ',';
    os << alpha[i].size;
    if (alpha[i].color != 0) os << '^' << alpha[i].color;
  }
  os << ')';
  return os.str();
}

std::string to_string(const ColoredPermutation& pi) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i > 0) os << ' ';
    os << pi[i].value;
    if (pi[i].color != 0) os << '^' << pi[i].color;
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ColoredComposition& alpha) { return os << to_string(alpha); }
std::ostream& operator<<(std::ostream& os, const ColoredPermutation& pi) { return os << to_string(pi); }

}  // namespace cqsym
