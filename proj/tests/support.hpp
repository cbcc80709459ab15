#pragma once

// Shared helpers for the unit tests: terse constructors and seeded random
// generators for domain objects.

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cqsym/combinat.hpp"
#include "cqsym/poset.hpp"

namespace cqsym::testing {

inline ColoredComposition comp(int colors, std::vector<std::pair<int, int>> parts) {
  std::vector<ColoredPart> out;
  for (auto [size, color] : parts) out.push_back({size, color});
  return ColoredComposition(colors, std::move(out));
}

inline ColoredPermutation perm(int colors, std::vector<std::pair<int, int>> letters) {
  std::vector<ColoredLetter> out;
  for (auto [value, color] : letters) out.push_back({value, color});
  return ColoredPermutation(colors, std::move(out));
}

inline ColoredPoset poset(int colors, std::vector<std::pair<int, int>> elements,
                          std::vector<std::pair<int, int>> relations) {
  std::vector<ColoredLetter> out;
  for (auto [value, color] : elements) out.push_back({value, color});
  return ColoredPoset(colors, std::move(out), relations);
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  ColoredComposition composition(int colors, int n) {
    std::vector<ColoredPart> parts;
    int left = n;
    while (left > 0) {
      const int size = uniform(1, left);
      parts.push_back({size, uniform(0, colors - 1)});
      left -= size;
    }
    return ColoredComposition(colors, std::move(parts));
  }

  // Random word on distinct values drawn from 1..max_value.
  ColoredPermutation permutation(int colors, int n, int max_value = 0) {
    if (max_value < n) max_value = n;
    std::vector<int> values(static_cast<std::size_t>(max_value));
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng_);
    std::vector<ColoredLetter> letters;
    for (int i = 0; i < n; ++i) letters.push_back({values[static_cast<std::size_t>(i)], uniform(0, colors - 1)});
    return ColoredPermutation(colors, std::move(letters));
  }

  // Random poset: relations i < k drawn along a random hidden linear order.
  ColoredPoset poset(int colors, int n, double density = 0.35, int max_value = 0) {
    const auto word = permutation(colors, n, max_value);
    std::vector<std::pair<int, int>> relations;
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        if (coin(density)) relations.emplace_back(word[static_cast<std::size_t>(i)].value, word[static_cast<std::size_t>(k)].value);
      }
    }
    return ColoredPoset(colors, word.letters(), relations);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cqsym::testing
