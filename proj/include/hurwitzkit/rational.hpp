#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hurwitzkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A requested computation exceeds the configured resource budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Always "num/den", even for integers ("-3/1").
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

Integer factorial(long n);

/// Binomial coefficient; the upper index may be negative
/// (C(n, k) = (-1)^k C(k - n - 1, k)), and C(n, k) = 0 for k < 0.
Integer binomial(long n, long k);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational power(const Rational& base, long exponent);

inline Rational rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace hurwitzkit
