#include "mvvol/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace mvvol {

namespace {

bool plain_integer(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_ratio(long num, long den) {
  return make_ratio(Integer(num), Integer(den));
}

Rational make_ratio(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  std::string num_s = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den_s = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!plain_integer(num_s, true) || !plain_integer(den_s, false)) {
    throw std::invalid_argument("malformed fraction: '" + s + "'");
  }
  Integer num(num_s);
  Integer den(den_s);
  if (sgn(den) <= 0) {
    throw std::invalid_argument("fraction denominator must be positive: '" + s + "'");
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("fraction not in lowest terms: '" + s + "'");
  }
  return Rational(num, den);  // coprime with den > 0: already canonical
}

}  // namespace mvvol
