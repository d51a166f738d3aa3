#include "mvvol/volume.hpp"

#include <stdexcept>
#include <string>

#include "mvvol/hodge.hpp"

namespace mvvol {

namespace {

constexpr long kMinNumericBits = 64;

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer pow2(long e) {
  Integer r(1);
  r <<= e;
  return r;
}

[[noreturn]] void reject_stratum(long g, long n) {
  throw std::domain_error(
      "volume: unstable or undefined stratum (g,n)=(" + std::to_string(g) +
      "," + std::to_string(n) +
      "); domain is g=0,n>=4 | g=1,n>=1 | g>=2,n>=0");
}

void require_covered(const CTable& table, long g) {
  if (table.gmax() < g) {
    throw std::out_of_range("volume: table too small, need gmax >= " +
                            std::to_string(g) + " but have " +
                            std::to_string(table.gmax()));
  }
}

}  // namespace

std::string render(const PiMultiple& v) {
  return to_fraction(v.coeff) + " * pi^" + std::to_string(v.pi_exp);
}

PiMultiple volume_exact(const CTable& table, long g, long n) {
  if (g < 0 || n < 0) reject_stratum(g, n);
  if (g == 0) {
    if (n < 4) reject_stratum(g, n);
    Rational coeff = n <= 5 ? Rational(pow2(5 - n)) : make_ratio(Integer(1), pow2(n - 5));
    return {coeff, 2 * n - 6};
  }
  if (g == 1) {
    if (n < 1) reject_stratum(g, n);
    Integer dsum = double_factorial(2 * n - 3) + double_factorial(2 * n - 2);
    Rational coeff = make_ratio(factorial(n) * dsum, 3 * factorial(2 * n - 1));
    return {coeff, 2 * n};
  }
  require_covered(table, g);
  Rational sum(0);
  for (long k = 0; k <= g; ++k) {
    Rational term = make_ratio(double_factorial(5 * g - 7 + 2 * n - k),
                               double_factorial(5 * g - 7 - k));
    term *= table.lookup(g, k);
    term /= (5 * g - 3 - k) * (5 * g - 5 - k);
    sum += term;
  }
  Rational pref = make_ratio(pow2(2 * g + 1) * factorial(4 * g - 4 + n),
                             factorial(6 * g - 7 + 2 * n));
  return {pref * sum, 6 * g - 6 + 2 * n};
}

PiMultiple volume_g0_form(const CTable& table, long g) {
  if (g < 2) {
    throw std::domain_error("volume_g0_form: g must be >= 2, got " +
                            std::to_string(g));
  }
  require_covered(table, g);
  Rational sum(0);
  for (long k = 0; k <= g; ++k) {
    sum += table.lookup(g, k) / ((5 * g - 3 - k) * (5 * g - 5 - k));
  }
  Rational pref =
      make_ratio(pow2(2 * g + 1) * factorial(4 * g - 4), factorial(6 * g - 7));
  return {pref * sum, 6 * g - 6};
}

BigReal to_big_real(const PiMultiple& v, long precision_bits) {
  if (precision_bits < kMinNumericBits) {
    throw std::invalid_argument("to_big_real: precision_bits must be >= 64");
  }
  BigReal coeff = BigReal::of(v.coeff, precision_bits);
  if (v.pi_exp == 0) return coeff;
  return coeff * BigReal::pi(precision_bits)
                     .pow(static_cast<unsigned long>(v.pi_exp));
}

BigReal stable_eval(const PiMultiple& v, int digits, long precision_bits) {
  if (digits < 1) throw std::invalid_argument("stable_eval: digits must be >= 1");
  long p = std::max(precision_bits, kMinNumericBits);
  BigReal cur = to_big_real(v, p);
  for (int round = 0; round < 24; ++round) {
    BigReal next = to_big_real(v, 2 * p);
    if (cur.digits10(digits) == next.digits10(digits)) return cur;
    cur = std::move(next);
    p *= 2;
  }
  throw std::runtime_error("stable_eval: digits did not stabilize");
}

PiMultiple asymptotic_ratio_exact(const CTable& table, long g) {
  if (g < 2) {
    throw std::domain_error("asymptotic_ratio: g must be >= 2, got " +
                            std::to_string(g));
  }
  PiMultiple v = volume_exact(table, g, 0);
  // dividing by (4/pi)(8/3)^{4g-4} multiplies the coefficient by
  // 3^{4g-4}/2^{12g-10} and raises the pi exponent by one
  Integer p3;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(4 * g - 4));
  return {v.coeff * make_ratio(p3, pow2(12 * g - 10)), v.pi_exp + 1};
}

BigReal asymptotic_ratio(const CTable& table, long g, long precision_bits) {
  return stable_eval(asymptotic_ratio_exact(table, g), 6, precision_bits);
}

BigReal conjectural_volume(long g, long precision_bits) {
  if (g < 1) {
    throw std::domain_error("conjectural_volume: g must be >= 1");
  }
  long p = std::max(precision_bits, kMinNumericBits);
  BigReal base = BigReal::of(make_ratio(8, 3), p);
  BigReal four_over_pi = BigReal::of(Rational(4), p) / BigReal::pi(p);
  return four_over_pi * base.pow(static_cast<unsigned long>(4 * g - 4));
}

}  // namespace mvvol
