#pragma once

#include <vector>

#include "mvvol/rational.hpp"

namespace mvvol {

// Triangular table of the normalized linear Hodge integrals c_{g,k},
// 1 <= g <= gmax, 0 <= k <= g, filled by dynamic programming over the
// quadratic recursion
//
//   c_{1,0} = 1/12,
//   c_{g,k} = (g+1-k)/(5g-2-k) * c_{g,k-1}
//           + (5g-6-k)(5g-4-k)/12 * c_{g-1,k}
//           + 1/2 * sum_{g1+g2=g, k1+k2=k} c_{g1,k1} c_{g2,k2},
//
// where any reference outside the triangle contributes 0 and the convolution
// runs over ordered pairs with g1, g2 >= 1. Entries are exact and strictly
// positive; a built table is immutable.
class CTable {
 public:
  // Throws std::invalid_argument if gmax < 1.
  static CTable build(long gmax);

  // Rows for g = 1..rows.size(); row g must hold the g+1 entries k = 0..g,
  // all strictly positive. Deserialization path; throws std::invalid_argument
  // on shape or positivity violations.
  static CTable from_rows(std::vector<std::vector<Rational>> rows);

  long gmax() const { return gmax_; }

  // Entry for (g,k) inside the triangle; exact 0 for any other (g,k) with
  // g <= gmax (the zero extension the convolution and the volume formulas
  // rely on). Throws std::out_of_range when g > gmax: that part of the table
  // has not been computed, which is different from being zero.
  const Rational& lookup(long g, long k) const;

  // The triangle restricted to genus <= new_gmax (1 <= new_gmax <= gmax).
  CTable prefix(long new_gmax) const;

  bool operator==(const CTable&) const = default;

 private:
  CTable() = default;

  long gmax_ = 0;
  std::vector<std::vector<Rational>> rows_;  // rows_[g-1] holds k = 0..g
};

// Checks the k = 0 column against the one-variable specialization
//   c_g = (5g-4)(5g-6)/12 * c_{g-1} + 1/2 sum_{g1+g2=g} c_{g1} c_{g2}.
bool k0_column_consistent(const CTable& table);

}  // namespace mvvol
