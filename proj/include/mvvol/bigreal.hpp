#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mvvol/rational.hpp"

namespace mvvol {

// Arbitrary-precision real that carries its working precision. Thin RAII
// wrapper over MPFR; every value knows at how many bits it was computed and
// numeric output always states its digit count.
class BigReal {
 public:
  explicit BigReal(long precision_bits);  // value 0
  BigReal(const BigReal& o);
  BigReal(BigReal&& o) noexcept;
  BigReal& operator=(BigReal o) noexcept;
  ~BigReal();

  // pi computed by MPFR's arbitrary-precision algorithm at the given
  // precision (never a machine constant).
  static BigReal pi(long precision_bits);
  static BigReal of(const Rational& q, long precision_bits);

  long precision_bits() const;

  BigReal pow(unsigned long e) const;
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  // First `count` significant decimal digits plus the decimal exponent:
  // value = +-0.DDDD... * 10^exp. Used for digit-stability comparisons.
  std::pair<std::string, long> digits10(int count) const;

  // Scientific notation with `digits` significant digits, e.g.
  // "6.40926129050203e+01".
  std::string sci(int digits) const;

  // Fixed-point with `decimals` digits after the point, e.g. "0.9993".
  std::string fixed(int decimals) const;

  double approx() const;  // nearest double, for display only

  void swap(BigReal& o) noexcept;

 private:
  mpfr_t v_;
};

}  // namespace mvvol
