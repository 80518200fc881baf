#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropval {

using Rational = mpq_class;

/// n/d in lowest terms; d must be nonzero. (mpq_class(n, d) does not normalize.)
Rational make_rational(long n, long d);

/// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws Error(Syntax).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p".
std::string to_string(const Rational& r);

/// Space separated rationals, e.g. "1 -1/2 3".
std::vector<Rational> parse_rational_list(std::string_view text);
std::string to_string(const std::vector<Rational>& values);

}  // namespace tropval
