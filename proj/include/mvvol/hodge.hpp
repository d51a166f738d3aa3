#pragma once

#include "mvvol/ctable.hpp"
#include "mvvol/rational.hpp"

namespace mvvol {

// Identifies the correlator <tau_0^n tau_2^{3g-3+n-k} lambda_k>.
struct HodgeQuery {
  long g = 0;  // genus, >= 2 here; g <= 1 goes through closed volume forms
  long k = 0;  // lambda index, 0..g
  long n = 0;  // number of tau_0 insertions, >= 0
};

// m!! = m(m-2)(m-4)... down to 1 or 2, with (-1)!! = 0!! = 1.
// Throws std::invalid_argument for m < -1.
Integer double_factorial(long m);

// (5g-7+2n-k)!! / (5g-7-k)!!, i.e. the telescoped product
// prod_{j=0}^{n-1} (5g-5-k+2j) coming from stripping the n tau_0 insertions
// with the string and dilaton equations. Requires g >= 2.
Rational reduction_factor(long g, long k, long n);

// Raw integral <tau_2^{3g-3-k} lambda_k> = (3g-3-k)! c_{g,k} / ((5g-3-k)(5g-5-k)).
// Requires g >= 2; for g = 1 the division base vanishes at k = 0 and the
// closed volume forms are used instead.
Rational tau2_lambda(const CTable& table, long g, long k);

// <tau_0^n tau_2^{3g-3+n-k} lambda_k>
//   = (3g-3+n-k)! * reduction_factor(g,k,n) * c_{g,k} / ((5g-3-k)(5g-5-k)).
Rational general_correlator(const CTable& table, const HodgeQuery& q);

}  // namespace mvvol
