#include "mvvol/hodge.hpp"

#include <stdexcept>
#include <string>

namespace mvvol {

namespace {

void require_gk(long g, long k, const char* who) {
  if (g < 2) {
    throw std::invalid_argument(std::string(who) + ": g must be >= 2, got " +
                                std::to_string(g));
  }
  if (k < 0 || k > g) {
    throw std::invalid_argument(std::string(who) + ": k must be in 0..g");
  }
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace

Integer double_factorial(long m) {
  if (m < -1) {
    throw std::invalid_argument("double_factorial: m must be >= -1, got " +
                                std::to_string(m));
  }
  if (m <= 0) return Integer(1);  // (-1)!! = 0!! = 1
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

Rational reduction_factor(long g, long k, long n) {
  require_gk(g, k, "reduction_factor");
  if (n < 0) throw std::invalid_argument("reduction_factor: n must be >= 0");
  Integer p(1);
  for (long j = 0; j < n; ++j) p *= 5 * g - 5 - k + 2 * j;
  return Rational(p);
}

Rational tau2_lambda(const CTable& table, long g, long k) {
  require_gk(g, k, "tau2_lambda");
  Rational r = factorial(3 * g - 3 - k) * table.lookup(g, k);
  r /= (5 * g - 3 - k) * (5 * g - 5 - k);
  return r;
}

Rational general_correlator(const CTable& table, const HodgeQuery& q) {
  require_gk(q.g, q.k, "general_correlator");
  if (q.n < 0) {
    throw std::invalid_argument("general_correlator: n must be >= 0");
  }
  Rational r = factorial(3 * q.g - 3 + q.n - q.k) *
               reduction_factor(q.g, q.k, q.n) * table.lookup(q.g, q.k);
  r /= (5 * q.g - 3 - q.k) * (5 * q.g - 5 - q.k);
  return r;
}

}  // namespace mvvol
