#pragma once

#include <string>
#include <vector>

#include "mvvol/ctable.hpp"
#include "mvvol/rational.hpp"

namespace mvvol {

// Exact Bernoulli numbers B_0..B_upto computed by the convolution recurrence
// sum_{j=0}^{m} C(m+1,j) B_j = 0. B_1 = -1/2 in this convention.
class BernoulliCache {
 public:
  // upto must be even and >= 2.
  explicit BernoulliCache(long upto);

  const Rational& at(long m) const;  // throws std::out_of_range beyond upto
  long upto() const { return static_cast<long>(values_.size()) - 1; }

 private:
  std::vector<Rational> values_;
};

// lambda_g-theorem prediction for the diagonal entry c_{g,g}:
//   c_{g,g} = (4g-3)(4g-5) <tau_2^{2g-3} lambda_g> / (2g-3)!   (g >= 2)
// with <tau_2^{2g-3} lambda_g> = (4g-6)!/2^{2g-3} <tau_{2g-2} lambda_g> and
// the one-point value <tau_{2g-2} lambda_g>
//   = (2^{2g-1}-1)/2^{2g-1} * |B_{2g}| / (2g)!.
// For g = 1 this is <tau_0 lambda_1> = 1/24 directly.
Rational lambda_g_diagonal(long g);
Rational lambda_g_diagonal(long g, const BernoulliCache& bernoulli);

struct VerifyCheck {
  std::string name;      // "anchor", "dvv-column" or "lambda-g-diagonal"
  long g = 0;
  long k = 0;
  std::string expected;  // exact fraction, oracle prediction
  std::string actual;    // exact fraction, table entry (or engine value)
  std::string delta;     // actual - expected, exact fraction
  bool pass = false;
};

struct VerifyReport {
  bool anchors_ok = false;
  std::vector<VerifyCheck> checks;

  bool all_pass() const;
  std::string text() const;  // structured, one line per check
  std::string json() const;  // machine-readable document
};

// Independently verifies the table: the DVV engine checks the k = 0 column
// via <tau_0^2 tau_2^{3g-1}>_g / (3g-1)! = c_{g,0} for 2 <= g <= dvv_gmax,
// and the lambda_g closed form checks the diagonal for 1 <= g <= diag_gmax.
// If the engine anchors fail, verification aborts (anchors_ok = false, no
// table checks) rather than reporting spurious mismatches. Table mismatches
// are report entries, never exceptions. Requires
// table.gmax() >= max(dvv_gmax, diag_gmax).
VerifyReport verify_table(const CTable& table, long dvv_gmax, long diag_gmax);

}  // namespace mvvol
