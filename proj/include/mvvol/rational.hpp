#pragma once

#include <gmpxx.h>

#include <string>

namespace mvvol {

// Exact arbitrary-precision scalars. All core computations are carried out in
// Rational; floating point only ever appears behind BigReal.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den reduced to lowest terms with positive denominator. den must be
// nonzero.
Rational make_ratio(long num, long den);
Rational make_ratio(const Integer& num, const Integer& den);

// Renders q as "num/den"; the denominator is always printed, even when 1.
std::string to_fraction(const Rational& q);

// Parses "num/den" (or a bare integer). Rejects anything that is not a plain
// base-10 fraction in lowest terms with a positive denominator.
Rational parse_fraction(const std::string& s);

}  // namespace mvvol
