#include "cqsym/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <tuple>

#include "cqsym/error.hpp"

namespace cqsym {

namespace {

ElementMask bit(std::size_t i) { return ElementMask{1} << i; }

void check_size(std::size_t n) {
  if (n > kMaxPosetSize) {
    throw InvariantError("poset-size", "posets are limited to " + std::to_string(kMaxPosetSize) + " elements");
  }
}

void check_elements(int colors, const std::vector<ColoredLetter>& elements) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
  check_size(elements.size());
  std::set<int> seen;
  for (const auto& e : elements) {
    if (e.value < 1) throw InvariantError("letter-value", "poset values must be positive");
    if (e.color < 0 || e.color >= colors) {
      throw InvariantError("color-range", "element color " + std::to_string(e.color) + " outside [0, " +
                                              std::to_string(colors) + ")");
    }
    if (!seen.insert(e.value).second) {
      throw InvariantError("distinct-values", "value " + std::to_string(e.value) + " repeated");
    }
  }
}

// Warshall closure over masks; throws on cycles.
std::vector<ElementMask> close(std::vector<ElementMask> below) {
  const std::size_t n = below.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (below[i] & bit(k)) below[i] |= below[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (below[i] & bit(i)) throw InvariantError("acyclic", "relations contain a cycle");
  }
  return below;
}

// Row of the canonical encoding: the color of the element placed at a
// position plus its relations to all earlier positions.
struct Row {
  int color;
  ElementMask down;
  ElementMask up;

  auto operator<=>(const Row&) const = default;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ColoredPoset& poset) : poset_(poset), n_(poset.size()) {
    current_.resize(n_);
    order_.resize(n_);
  }

  std::vector<std::size_t> run() {
    dfs(0, 0, false);
    return best_order_;
  }

 private:
  void dfs(std::size_t position, ElementMask placed, bool strictly_less) {
    if (position == n_) {
      if (!have_best_ || strictly_less) {
        best_ = current_;
        best_order_ = order_;
        have_best_ = true;
        ++updates_;
      }
      return;
    }
    for (std::size_t e = 0; e < n_; ++e) {
      if (placed & bit(e)) continue;
      // An element comparable to e with a smaller value must come first.
      const ElementMask pending = (poset_.below(e) | poset_.above(e)) & ~placed;
      if (pending & (bit(e) - 1)) continue;
      Row row{poset_.elements()[e].color, 0, 0};
      for (std::size_t p = 0; p < position; ++p) {
        if (poset_.less(order_[p], e)) row.down |= bit(p);
        if (poset_.less(e, order_[p])) row.up |= bit(p);
      }
      bool next_less = strictly_less;
      if (have_best_ && !strictly_less) {
        const auto cmp = row <=> best_[position];
        if (cmp > 0) continue;
        next_less = cmp < 0;
      }
      current_[position] = row;
      order_[position] = e;
      const std::size_t updates = updates_;
      dfs(position + 1, placed | bit(e), next_less);
      // A new best below here shares this prefix, so later siblings must
      // be compared against it again.
      if (updates_ != updates) strictly_less = false;
    }
  }

  const ColoredPoset& poset_;
  std::size_t n_;
  std::vector<Row> current_;
  std::vector<Row> best_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> best_order_;
  bool have_best_ = false;
  std::size_t updates_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------

ColoredPoset::ColoredPoset(int colors) : colors_(colors) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
}

ColoredPoset::ColoredPoset(int colors, std::vector<ColoredLetter> elements,
                           const std::vector<std::pair<int, int>>& relations)
    : colors_(colors), elements_(std::move(elements)) {
  check_elements(colors_, elements_);
  std::sort(elements_.begin(), elements_.end());
  below_.assign(elements_.size(), 0);
  for (const auto& [low, high] : relations) {
    const auto i = index_of(low);
    const auto k = index_of(high);
    if (!i || !k) {
      throw InvariantError("cover-endpoints", "relation (" + std::to_string(low) + ", " + std::to_string(high) +
                                                  ") references a value outside the poset");
    }
    below_[*k] |= bit(*i);
  }
  below_ = close(std::move(below_));
}

ColoredPoset::ColoredPoset(int colors, std::vector<ColoredLetter> elements, std::vector<ElementMask> below)
    : colors_(colors), elements_(std::move(elements)), below_(std::move(below)) {}

ColoredPoset ColoredPoset::chain(const ColoredPermutation& pi) {
  std::vector<std::pair<int, int>> relations;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) relations.emplace_back(pi[i].value, pi[i + 1].value);
  return ColoredPoset(pi.colors(), pi.letters(), relations);
}

ColoredPoset ColoredPoset::antichain(int colors, std::vector<ColoredLetter> elements) {
  return ColoredPoset(colors, std::move(elements), std::vector<std::pair<int, int>>{});
}

ElementMask ColoredPoset::full_mask() const noexcept {
  return elements_.empty() ? 0 : static_cast<ElementMask>((std::uint64_t{1} << elements_.size()) - 1);
}

ElementMask ColoredPoset::above(std::size_t i) const {
  ElementMask out = 0;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (below_[k] & bit(i)) out |= bit(k);
  }
  return out;
}

std::optional<std::size_t> ColoredPoset::index_of(int value) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), value,
                             [](const ColoredLetter& e, int v) { return e.value < v; });
  if (it == elements_.end() || it->value != value) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<int, int>> ColoredPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!less(i, k)) continue;
      // i is covered by k unless some j sits strictly between them.
      if ((above(i) & below_[k]) == 0) out.emplace_back(elements_[i].value, elements_[k].value);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ColoredPoset ColoredPoset::restrict(ElementMask subset) const {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (subset & bit(i)) kept.push_back(i);
  }
  std::vector<ColoredLetter> elements;
  std::vector<ElementMask> below(kept.size(), 0);
  for (std::size_t a = 0; a < kept.size(); ++a) {
    elements.push_back(elements_[kept[a]]);
    for (std::size_t b = 0; b < kept.size(); ++b) {
      if (less(kept[b], kept[a])) below[a] |= bit(b);
    }
  }
  return ColoredPoset(colors_, std::move(elements), std::move(below));
}

bool ColoredPoset::is_ideal(ElementMask subset) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if ((subset & bit(i)) && (below_[i] & ~subset)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<ElementMask> ideal_masks(const ColoredPoset& poset) {
  // Decide elements in a linear-extension order so every lower element is
  // decided first; each ideal is then produced exactly once.
  std::vector<std::size_t> order;
  ElementMask seen = 0;
  while (order.size() < poset.size()) {
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (!(seen & bit(i)) && (poset.below(i) & ~seen) == 0) {
        order.push_back(i);
        seen |= bit(i);
      }
    }
  }
  std::vector<ElementMask> out;
  auto recurse = [&](auto&& self, std::size_t depth, ElementMask current) -> void {
    if (depth == order.size()) {
      out.push_back(current);
      return;
    }
    const std::size_t e = order[depth];
    self(self, depth + 1, current);
    if ((poset.below(e) & ~current) == 0) self(self, depth + 1, current | bit(e));
  };
  recurse(recurse, 0, 0);
  std::sort(out.begin(), out.end(), [](ElementMask a, ElementMask b) {
    return std::make_pair(std::popcount(a), a) < std::make_pair(std::popcount(b), b);
  });
  return out;
}

std::vector<Ideal> ideals(const ColoredPoset& poset) {
  std::vector<Ideal> out;
  for (ElementMask mask : ideal_masks(poset)) {
    out.push_back({mask, poset.restrict(mask), poset.restrict(poset.full_mask() & ~mask)});
  }
  return out;
}

std::vector<ColoredPermutation> linear_extensions(const ColoredPoset& poset) {
  std::vector<ColoredPermutation> out;
  std::vector<ColoredLetter> word;
  auto recurse = [&](auto&& self, ElementMask used) -> void {
    if (word.size() == poset.size()) {
      out.emplace_back(poset.colors(), word);
      return;
    }
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if ((used & bit(i)) || (poset.below(i) & ~used)) continue;
      word.push_back(poset.elements()[i]);
      self(self, used | bit(i));
      word.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

ColoredPoset relabel(const ColoredPoset& poset, const std::vector<int>& new_values) {
  if (new_values.size() != poset.size()) {
    throw InvariantError("relabel-size", "relabeling must give one value per element");
  }
  std::vector<ColoredLetter> letters;
  for (std::size_t i = 0; i < poset.size(); ++i) letters.push_back({new_values[i], poset.elements()[i].color});
  check_elements(poset.colors(), letters);
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return new_values[a] < new_values[b]; });
  std::vector<ElementMask> below(poset.size(), 0);
  std::vector<ColoredLetter> sorted;
  for (std::size_t a = 0; a < order.size(); ++a) {
    sorted.push_back(letters[order[a]]);
    for (std::size_t b = 0; b < order.size(); ++b) {
      if (poset.less(order[b], order[a])) below[a] |= bit(b);
    }
  }
  return ColoredPoset(poset.colors(), std::move(sorted), std::move(below));
}

ColoredPoset canonical_form(const ColoredPoset& poset) {
  const auto order = CanonicalSearch(poset).run();
  const std::size_t n = poset.size();
  std::vector<ColoredLetter> elements(n);
  std::vector<ElementMask> below(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    elements[p] = {static_cast<int>(p) + 1, poset.elements()[order[p]].color};
    for (std::size_t q = 0; q < n; ++q) {
      if (poset.less(order[q], order[p])) below[p] |= bit(q);
    }
  }
  return ColoredPoset(poset.colors(), std::move(elements), std::move(below));
}

bool equivalent(const ColoredPoset& a, const ColoredPoset& b) {
  return a.colors() == b.colors() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

ColoredPoset disjoint_union(const ColoredPoset& left, const ColoredPoset& right) {
  if (left.colors() != right.colors()) {
    throw InvariantError("color-count-mismatch", "posets use different numbers of colors");
  }
  check_size(left.size() + right.size());
  int offset = 0;
  const int left_max = left.empty() ? 0 : left.elements().back().value;
  for (const auto& e : right.elements()) {
    if (left.index_of(e.value)) {
      offset = left_max;
      break;
    }
  }
  // Merge by value, remembering where each element came from.
  struct Source {
    ColoredLetter letter;
    bool from_left;
    std::size_t index;
  };
  std::vector<Source> merged;
  for (std::size_t i = 0; i < left.size(); ++i) merged.push_back({left.elements()[i], true, i});
  for (std::size_t i = 0; i < right.size(); ++i) {
    merged.push_back({{right.elements()[i].value + offset, right.elements()[i].color}, false, i});
  }
  std::sort(merged.begin(), merged.end(), [](const Source& a, const Source& b) { return a.letter < b.letter; });
  std::vector<ColoredLetter> elements;
  std::vector<ElementMask> below(merged.size(), 0);
  for (std::size_t a = 0; a < merged.size(); ++a) {
    elements.push_back(merged[a].letter);
    for (std::size_t b = 0; b < merged.size(); ++b) {
      if (merged[a].from_left != merged[b].from_left) continue;
      const auto& side = merged[a].from_left ? left : right;
      if (side.less(merged[b].index, merged[a].index)) below[a] |= bit(b);
    }
  }
  return ColoredPoset(left.colors(), std::move(elements), std::move(below));
}

std::optional<ColoredPermutation> natural_labeling_witness(const ColoredPoset& poset) {
  // The only candidate word sorts by (color, value).
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto& elements = poset.elements();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(elements[a].color, elements[a].value) < std::tie(elements[b].color, elements[b].value);
  });
  std::vector<ColoredLetter> word;
  ElementMask used = 0;
  for (std::size_t i : order) {
    if (poset.below(i) & ~used) return std::nullopt;
    used |= bit(i);
    word.push_back(elements[i]);
  }
  return ColoredPermutation(poset.colors(), std::move(word));
}

bool is_naturally_labeled(const ColoredPoset& poset) { return natural_labeling_witness(poset).has_value(); }

bool is_monochromatic(const ColoredPoset& poset, int color) {
  return std::all_of(poset.elements().begin(), poset.elements().end(),
                     [color](const ColoredLetter& e) { return e.color == color; });
}

std::vector<ColoredPoset> enumerate_labeled_posets(int colors, int n) {
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
  check_size(static_cast<std::size_t>(std::max(n, 0)));
  // Grow closures one element at a time: the new element gets an order
  // ideal below it and an order filter above it, every member of the ideal
  // below every member of the filter.
  std::vector<std::vector<ElementMask>> shapes{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<ElementMask>> next;
    for (const auto& below : shapes) {
      const ElementMask all = static_cast<ElementMask>((std::uint64_t{1} << k) - 1);
      for (ElementMask down = 0; down <= all; ++down) {
        bool down_ok = true;
        for (int i = 0; i < k && down_ok; ++i) {
          if ((down & bit(static_cast<std::size_t>(i))) && (below[static_cast<std::size_t>(i)] & ~down)) down_ok = false;
        }
        if (!down_ok) continue;
        for (ElementMask up = 0; up <= all; ++up) {
          if (up & down) continue;
          bool up_ok = true;
          for (int i = 0; i < k && up_ok; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            // Filter: anything above a member of `up` is in `up`.
            for (int j = 0; j < k && up_ok; ++j) {
              const auto jj = static_cast<std::size_t>(j);
              if ((up & bit(ii)) && (below[jj] & bit(ii)) && !(up & bit(jj))) up_ok = false;
            }
            if ((up & bit(ii)) && (down & ~below[ii])) up_ok = false;
          }
          if (!up_ok) continue;
          auto grown = below;
          for (int i = 0; i < k; ++i) {
            if (up & bit(static_cast<std::size_t>(i))) grown[static_cast<std::size_t>(i)] |= bit(static_cast<std::size_t>(k));
          }
          grown.push_back(down);
          // Keep closure transitive: everything below k is below each of up.
          for (int i = 0; i < k; ++i) {
            if (up & bit(static_cast<std::size_t>(i))) grown[static_cast<std::size_t>(i)] |= down;
          }
          next.push_back(std::move(grown));
        }
      }
    }
    shapes = std::move(next);
  }
  std::size_t colorings = 1;
  for (int i = 0; i < n; ++i) colorings *= static_cast<std::size_t>(colors);
  std::vector<ColoredPoset> out;
  out.reserve(shapes.size() * colorings);
  for (const auto& below : shapes) {
    for (std::size_t code = 0; code < colorings; ++code) {
      std::vector<ColoredLetter> elements;
      std::size_t rest = code;
      for (int i = 0; i < n; ++i) {
        elements.push_back({i + 1, static_cast<int>(rest % static_cast<std::size_t>(colors))});
        rest /= static_cast<std::size_t>(colors);
      }
      out.push_back(ColoredPoset(colors, std::move(elements), below));
    }
  }
  return out;
}

std::vector<ColoredPoset> enumerate_canonical_posets(int colors, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<ColoredPoset>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({colors, n}); it != memo.end()) return it->second;
  }
  std::set<ColoredPoset> classes;
  for (const auto& poset : enumerate_labeled_posets(colors, n)) classes.insert(canonical_form(poset));
  std::vector<ColoredPoset> out(classes.begin(), classes.end());
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(colors, n), out);
  return out;
}

std::string to_string(const ColoredPoset& poset) {
  std::string out = "{";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& e = poset.elements()[i];
    if (i > 0) out += ' ';
    out += std::to_string(e.value);
    if (e.color != 0) out += '^' + std::to_string(e.color);
  }
  const auto covers = poset.covers();
  if (!covers.empty()) {
    out += " |";
    for (const auto& [low, high] : covers) out += ' ' + std::to_string(low) + '<' + std::to_string(high);
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const ColoredPoset& poset) { return os << to_string(poset); }

}  // namespace cqsym
