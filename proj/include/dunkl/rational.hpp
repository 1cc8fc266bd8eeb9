#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dunkl {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Thrown for malformed input: bad text, invalid root systems, out-of-range
/// arguments. Maps to a usage error at the command line.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an identity the algebra guarantees fails to hold, e.g. a
/// nonzero remainder in a division that must be exact.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Parses "p", "-p" or "p/q" (decimal integers). Throws InputError.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1,3/2,0".
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

Rational factorial(unsigned n);

/// base^n for integer n (negative n allowed when base != 0).
Rational power(const Rational& base, int n);

Rational dot(const RationalVector& a, const RationalVector& b);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// True when q is an even integer.
bool is_even_integer(const Rational& q);

/// Exact conversion of a finite double to a rational (doubles are dyadic).
Rational from_double(double v);

} // namespace dunkl
