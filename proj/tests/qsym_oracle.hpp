#pragma once

// Reference monomial product: the colored quasi-shuffle. Parts from the two
// factors interleave; two parts may also fuse into one when they carry the
// same color (same variable x_{i,j}).

#include <map>
#include <vector>

#include "cqsym/combinat.hpp"
#include "cqsym/linear.hpp"

namespace cqsym::testing {

inline void quasi_shuffle_into(const std::vector<ColoredPart>& a, std::size_t i, const std::vector<ColoredPart>& b,
                               std::size_t k, std::vector<ColoredPart>& prefix, int colors,
                               LinearCombination<ColoredComposition>& out) {
  if (i == a.size() && k == b.size()) {
    out.add(ColoredComposition(colors, prefix), 1);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    quasi_shuffle_into(a, i + 1, b, k, prefix, colors, out);
    prefix.pop_back();
  }
  if (k < b.size()) {
    prefix.push_back(b[k]);
    quasi_shuffle_into(a, i, b, k + 1, prefix, colors, out);
    prefix.pop_back();
  }
  if (i < a.size() && k < b.size() && a[i].color == b[k].color) {
    prefix.push_back({a[i].size + b[k].size, a[i].color});
    quasi_shuffle_into(a, i + 1, b, k + 1, prefix, colors, out);
    prefix.pop_back();
  }
}

inline LinearCombination<ColoredComposition> quasi_shuffle(const ColoredComposition& a, const ColoredComposition& b) {
  LinearCombination<ColoredComposition> out;
  std::vector<ColoredPart> prefix;
  quasi_shuffle_into(a.parts(), 0, b.parts(), 0, prefix, a.colors(), out);
  return out;
}

}  // namespace cqsym::testing
