#include "mvvol/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace mvvol {

namespace {

long checked_prec(long precision_bits) {
  if (precision_bits < MPFR_PREC_MIN) {
    throw std::invalid_argument("BigReal: precision_bits too small");
  }
  return precision_bits;
}

}  // namespace

BigReal::BigReal(long precision_bits) {
  mpfr_init2(v_, checked_prec(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(BigReal o) noexcept {
  swap(o);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

void BigReal::swap(BigReal& o) noexcept { mpfr_swap(v_, o.v_); }

BigReal BigReal::pi(long precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::of(const Rational& q, long precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

long BigReal::precision_bits() const { return mpfr_get_prec(v_); }

BigReal BigReal::pow(unsigned long e) const {
  BigReal r(precision_bits());
  mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.precision_bits(), b.precision_bits()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.precision_bits(), b.precision_bits()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

std::pair<std::string, long> BigReal::digits10(int count) const {
  if (count < 1) throw std::invalid_argument("digits10: count must be >= 1");
  if (mpfr_zero_p(v_)) return {std::string(count, '0'), 0};
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(count), v_,
                         MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  return {digits, static_cast<long>(e)};
}

std::string BigReal::sci(int digits) const {
  if (digits < 1) throw std::invalid_argument("sci: digits must be >= 1");
  auto [mant, e] = digits10(digits);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  if (mpfr_zero_p(v_)) e = 1;  // render zero as 0.00...e+00
  char exp_buf[32];
  std::snprintf(exp_buf, sizeof exp_buf, "e%+03ld", e - 1);
  std::string out = neg ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += exp_buf;
  return out;
}

std::string BigReal::fixed(int decimals) const {
  if (decimals < 0) throw std::invalid_argument("fixed: decimals must be >= 0");
  int n = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
  if (n < 0) throw std::runtime_error("fixed: formatting failed");
  std::string out(static_cast<std::size_t>(n), '\0');
  mpfr_snprintf(out.data(), out.size() + 1, "%.*Rf", decimals, v_);
  return out;
}

double BigReal::approx() const { return mpfr_get_d(v_, MPFR_RNDN); }

}  // namespace mvvol
