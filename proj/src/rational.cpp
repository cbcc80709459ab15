#include "cqsym/rational.hpp"

#include <cctype>

#include "cqsym/error.hpp"

namespace cqsym {

Rational parse_rational(std::string_view text) {
  auto valid_integer = [](std::string_view digits) {
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto numerator = text.substr(0, slash);
  const auto denominator = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(numerator) || !valid_integer(denominator) || denominator.front() == '-' ||
      denominator.front() == '+') {
    throw ParseError(std::string(text), "malformed rational '" + std::string(text) + "'");
  }
  std::string num(numerator);
  if (num.front() == '+') num.erase(0, 1);
  const Integer den{std::string(denominator)};
  if (den == 0) throw ParseError(std::string(text), "zero denominator");
  Rational out(Integer(num), den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace cqsym
