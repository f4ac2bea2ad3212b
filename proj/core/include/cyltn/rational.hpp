#ifndef CYLTN_RATIONAL_HPP
#define CYLTN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace cyltn {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as arithmetic goes through its operators.
using Rational = mpq_class;

// Accepts "p" or "p/q" where p is a decimal integer with optional leading
// '-' and q is a positive decimal integer. Anything else throws
// std::invalid_argument.
Rational rational_from_string(const std::string& s);

// Inverse of rational_from_string: "p" when the denominator is 1, "p/q"
// otherwise. Canonical: lowest terms, sign on the numerator.
std::string rational_to_string(const Rational& r);

}  // namespace cyltn

#endif
