#include "cqsym/oracle.hpp"

#include <sstream>

#include "cqsym/error.hpp"

namespace cqsym {

namespace {

void check_alphabet(int alphabet_size) {
  if (alphabet_size < 1) throw InvariantError("alphabet-size", "alphabet size must be at least 1");
}

// A value in the target alphabet, ordered by (index, color, sign) with the
// negative copy first. Unsigned alphabets use only positive values.
struct Letter {
  int index = 1;
  int color = 0;
  bool positive = true;
  auto operator<=>(const Letter&) const = default;
};

// Elements in one linear extension, each with the elements below it; every
// predecessor is assigned before the element itself.
struct Visit {
  std::size_t element;
  std::vector<std::size_t> predecessors;
};

std::vector<Visit> visiting_order(const ColoredPoset& poset) {
  std::vector<Visit> order;
  ElementMask placed = 0;
  while (order.size() < poset.size()) {
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (((placed >> i) & 1U) || (poset.below(i) & ~placed)) continue;
      Visit visit{i, {}};
      for (std::size_t k = 0; k < poset.size(); ++k) {
        if (poset.less(k, i)) visit.predecessors.push_back(k);
      }
      order.push_back(std::move(visit));
      placed |= ElementMask{1} << i;
      break;
    }
  }
  return order;
}

// Depth-first search over color-preserving maps, pruning on each relation
// k <_P i as soon as i is assigned. `admissible(lower, upper, labels_increase)`
// decides one relation.
template <class Admissible>
TruncatedPolynomial search(const ColoredPoset& poset, int alphabet_size, bool signed_values, Admissible admissible) {
  check_alphabet(alphabet_size);
  TruncatedPolynomial out(alphabet_size, poset.colors());
  const auto& elements = poset.elements();
  const auto order = visiting_order(poset);
  std::vector<Letter> assigned(poset.size());
  auto exponents = out.one();
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      out.add(exponents, 1);
      return;
    }
    const auto& visit = order[depth];
    const auto& element = elements[visit.element];
    for (int s = 1; s <= alphabet_size; ++s) {
      for (int sign = signed_values ? 0 : 1; sign <= 1; ++sign) {
        const Letter value{s, element.color, sign == 1};
        bool ok = true;
        for (std::size_t k : visit.predecessors) {
          // Labels compare by (value, color); values are distinct.
          if (!admissible(assigned[k], value, elements[k].value < element.value)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        assigned[visit.element] = value;
        const auto slot = out.variable(s, element.color);
        ++exponents[slot];
        self(self, depth + 1);
        --exponents[slot];
      }
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// TruncatedPolynomial

TruncatedPolynomial::TruncatedPolynomial(int alphabet_size, int colors) : alphabet_size_(alphabet_size), colors_(colors) {
  check_alphabet(alphabet_size);
  if (colors < 1) throw InvariantError("color-count", "number of colors must be at least 1");
}

std::size_t TruncatedPolynomial::variable(int index, int color) const {
  if (index < 1 || index > alphabet_size_ || color < 0 || color >= colors_) {
    throw InvariantError("variable-range", "variable x_{" + std::to_string(index) + "," + std::to_string(color) +
                                               "} outside the truncated alphabet");
  }
  return static_cast<std::size_t>((index - 1) * colors_ + color);
}

TruncatedPolynomial::Exponents TruncatedPolynomial::monomial(const std::vector<VariablePower>& powers) const {
  auto out = one();
  for (const auto& p : powers) {
    if (p.exponent < 0) throw InvariantError("exponent-sign", "negative exponent");
    out[variable(p.index, p.color)] += p.exponent;
  }
  return out;
}

std::vector<VariablePower> TruncatedPolynomial::powers(const Exponents& exponents) const {
  std::vector<VariablePower> out;
  for (std::size_t slot = 0; slot < exponents.size(); ++slot) {
    if (exponents[slot] == 0) continue;
    const int s = static_cast<int>(slot);
    out.push_back({s / colors_ + 1, s % colors_, exponents[slot]});
  }
  return out;
}

void TruncatedPolynomial::add(const Exponents& exponents, const Rational& coeff) {
  if (exponents.size() != static_cast<std::size_t>(alphabet_size_ * colors_)) {
    throw InvariantError("exponent-length", "exponent vector does not match the alphabet");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TruncatedPolynomial::coefficient(const std::vector<VariablePower>& powers) const {
  auto it = terms_.find(monomial(powers));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedPolynomial::total() const {
  Rational sum = 0;
  for (const auto& [exponents, coeff] : terms_) sum += coeff;
  return sum;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  if (a.alphabet_size() != b.alphabet_size() || a.colors() != b.colors()) {
    throw InvariantError("alphabet-mismatch", "multiplying polynomials over different alphabets");
  }
  TruncatedPolynomial out(a.alphabet_size(), a.colors());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

TruncatedPolynomial shift_alphabet(const TruncatedPolynomial& p, int offset, int alphabet_size) {
  TruncatedPolynomial out(alphabet_size, p.colors());
  for (const auto& [exponents, coeff] : p.terms()) {
    auto powers = p.powers(exponents);
    for (auto& power : powers) power.index += offset;
    out.add(out.monomial(powers), coeff);
  }
  return out;
}

std::string to_string(const TruncatedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exponents, coeff] : p.terms()) {
    os << (first ? "" : " + ");
    first = false;
    const auto powers = p.powers(exponents);
    if (coeff != 1 || powers.empty()) os << coeff.get_str() << (powers.empty() ? "" : " ");
    for (std::size_t i = 0; i < powers.size(); ++i) {
      os << (i ? " " : "") << "x" << powers[i].index << "," << powers[i].color;
      if (powers[i].exponent != 1) os << "^" << powers[i].exponent;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Oracles

TruncatedPolynomial enumerate_ppartitions(const ColoredPoset& poset, int alphabet_size) {
  return search(poset, alphabet_size, false, [](const Letter& lower, const Letter& upper, bool labels_increase) {
    return labels_increase ? lower <= upper : lower < upper;
  });
}

TruncatedPolynomial enumerate_enriched(const ColoredPoset& poset, int alphabet_size) {
  return search(poset, alphabet_size, true, [](const Letter& lower, const Letter& upper, bool labels_increase) {
    // <=+ allows equality on positive values, <=- on negative ones.
    if (lower < upper) return true;
    return lower == upper && lower.positive == labels_increase;
  });
}

TruncatedPolynomial truncate(const QSymElement& element, int alphabet_size) {
  check_alphabet(alphabet_size);
  const auto monomials = to_m(element);
  TruncatedPolynomial out(alphabet_size, element.colors());
  for (const auto& [alpha, coeff] : monomials.terms()) {
    // Strictly increasing (index, color) positions with the colors of alpha.
    auto exponents = out.one();
    const auto& parts = alpha.parts();
    auto place = [&](auto&& self, std::size_t r, int previous_index, int previous_color) -> void {
      if (r == parts.size()) {
        out.add(exponents, coeff);
        return;
      }
      const int color = parts[r].color;
      const int first = color > previous_color ? previous_index : previous_index + 1;
      for (int i = first; i <= alphabet_size; ++i) {
        const auto slot = out.variable(i, color);
        exponents[slot] += parts[r].size;
        self(self, r + 1, i, color);
        exponents[slot] -= parts[r].size;
      }
    };
    place(place, 0, 1, -1);
  }
  return out;
}

SplitAlphabetReport split_alphabet_report(const ColoredPoset& poset, int alphabet_size) {
  check_alphabet(alphabet_size);
  const int doubled = 2 * alphabet_size;
  SplitAlphabetReport report;
  const auto whole = enumerate_ppartitions(poset, doubled);
  report.whole_count = whole.total();
  TruncatedPolynomial split(doubled, poset.colors());
  report.split_count = 0;
  for (const auto& ideal : ideals(poset)) {
    const auto lower = enumerate_ppartitions(ideal.lower, alphabet_size);
    const auto upper = enumerate_ppartitions(ideal.upper, alphabet_size);
    report.split_count += lower.total() * upper.total();
    const auto term = shift_alphabet(lower, 0, doubled) * shift_alphabet(upper, alphabet_size, doubled);
    for (const auto& [exponents, coeff] : term.terms()) split.add(exponents, coeff);
  }
  report.polynomials_equal = whole == split;
  return report;
}

bool split_alphabet_check(const ColoredPoset& poset, int alphabet_size) {
  return split_alphabet_report(poset, alphabet_size).holds();
}

}  // namespace cqsym
