#include "rshapiro/common.hpp"

#include <cctype>
#include <cstdlib>

namespace rshapiro {

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = (text[pos] == '-');
    ++pos;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.') {
      if (seen_dot) throw DomainError("malformed decimal: " + std::string(text));
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("malformed decimal: " + std::string(text));
    if (den > 100'000'000'000'000'000LL)
      throw DomainError("too many fraction digits: " + std::string(text));
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
    any_digit = true;
  }
  if (!any_digit) throw DomainError("malformed decimal: " + std::string(text));
  return Rational(negative ? -num : num, den);
}

}  // namespace rshapiro
