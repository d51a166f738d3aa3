#pragma once

#include <string>

#include "mvvol/bigreal.hpp"
#include "mvvol/ctable.hpp"

namespace mvvol {

// Exact value of the form (rational) * pi^pi_exp. Every Masur-Veech volume
// V_{g,n} produced here has coeff > 0 and pi_exp = 6g-6+2n.
struct PiMultiple {
  Rational coeff;
  long pi_exp = 0;
  bool operator==(const PiMultiple&) const = default;
};

// "<num>/<den> * pi^<e>", e.g. "1/15 * pi^6".
std::string render(const PiMultiple& v);

// Masur-Veech volume of the principal stratum of meromorphic quadratic
// differentials with 4g-4+n simple zeros and n simple poles:
//
//   g = 0, n >= 4:  2^{5-n} pi^{2n-6}
//   g = 1, n >= 1:  n!/(3(2n-1)!) ((2n-3)!! + (2n-2)!!) pi^{2n}
//   g >= 2, n >= 0: 2^{2g+1} pi^{6g-6+2n} (4g-4+n)!/(6g-7+2n)!
//                   * sum_{k=0}^{g} (5g-7+2n-k)!!/(5g-7-k)!!
//                                   * c_{g,k} / ((5g-3-k)(5g-5-k))
//
// The double-factorial factor depends on k and sits inside the sum. Throws
// std::domain_error outside the domain above (unstable or undefined stratum)
// and std::out_of_range when the table does not cover g.
PiMultiple volume_exact(const CTable& table, long g, long n);

// The n = 0 assembly 2^{2g+1} pi^{6g-6} (4g-4)!/(6g-7)!
// * sum_k c_{g,k}/((5g-3-k)(5g-5-k)), g >= 2. Coincides with
// volume_exact(table, g, 0) identically; kept as a separate code path so the
// agreement is a meaningful check.
PiMultiple volume_g0_form(const CTable& table, long g);

// Evaluates coeff * pi^pi_exp with all intermediates at >= precision_bits of
// mantissa; relative error bounded by 2^-(precision_bits-8). Requires
// precision_bits >= 64.
BigReal to_big_real(const PiMultiple& v, long precision_bits);

// Evaluates v with the precision doubled until the first `digits` significant
// decimal digits are stable between consecutive evaluations.
BigReal stable_eval(const PiMultiple& v, int digits, long precision_bits);

// V_{g,0} / ((4/pi)(8/3)^{4g-4}) assembled exactly:
// coeff * 3^{4g-4}/2^{12g-10} times pi^{6g-5}. Requires g >= 2.
PiMultiple asymptotic_ratio_exact(const CTable& table, long g);

// Numeric value of the ratio above; precision is escalated automatically
// until the first 6 decimal digits are stable.
BigReal asymptotic_ratio(const CTable& table, long g, long precision_bits);

// The conjectural large-genus value (4/pi)(8/3)^{4g-4}; g >= 1 (the exponent
// is 0 at g = 1, which only serves unit testing of this denominator).
BigReal conjectural_volume(long g, long precision_bits);

}  // namespace mvvol
