#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "cqsym/rational.hpp"

namespace cqsym {

/// Sparse exact linear combination of basis keys. Zero coefficients are
/// never stored, so two combinations are equal iff their maps are equal.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
 public:
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;

  static LinearCombination single(Key key, Rational coeff = 1) {
    LinearCombination out;
    out.add(std::move(key), coeff);
    return out;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(Key&& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add_scaled(const LinearCombination& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * scale);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  LinearCombination& operator+=(const LinearCombination& other) {
    add_scaled(other, 1);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    add_scaled(other, -1);
    return *this;
  }
  LinearCombination& operator*=(const Rational& scale) {
    if (scale == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= scale;
    }
    return *this;
  }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

}  // namespace cqsym
