#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tpr {

/// Exact rational scalar. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator, so `==` is canonical-form equality.
using Rational = mpq_class;
using Integer = mpz_class;

/// Error raised by every library operation on a violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// p/q in lowest terms; throws on q == 0.
Rational make_rational(long p, long q = 1);

/// Parses "p", "-p", "p/q" (decimal integers, arbitrary size).
Rational parse_rational(std::string_view text);

/// Renders "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

int sign(const Rational& value);

/// value^exponent for exponent >= 0.
Rational pow(const Rational& value, unsigned exponent);

} // namespace tpr
