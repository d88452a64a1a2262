#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tclass {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational; throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

Rational floor(const Rational& q);
Rational ceil(const Rational& q);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Lexicographic comparison of two rational vectors. A shorter vector that is
/// a prefix of the longer one compares less.
std::strong_ordering compare_lex(std::span<const Rational> a,
                                 std::span<const Rational> b);

}  // namespace tclass
