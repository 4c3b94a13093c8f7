#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcoalg {

using Rational = mpq_class;

// Canonical form: "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "[-+]digits" or "[-+]digits/digits" with a nonzero denominator.
// Throws ParseError (column relative to the start of `text`).
Rational parse_rational(std::string_view text);

}  // namespace qcoalg
