#include "mvvol/ctable.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace mvvol {

namespace {

// Ordered-pair convolution sum_{g1+g2=g} sum_{k1+k2=k} c_{g1,k1} c_{g2,k2}
// restricted to in-triangle indices.
Rational convolution(const std::vector<std::vector<Rational>>& rows, long g,
                     long k) {
  Rational acc(0);
  for (long g1 = 1; g1 < g; ++g1) {
    const long g2 = g - g1;
    const auto& r1 = rows[g1 - 1];
    const auto& r2 = rows[g2 - 1];
    const long k1_lo = std::max(0L, k - g2);
    const long k1_hi = std::min(k, g1);
    for (long k1 = k1_lo; k1 <= k1_hi; ++k1) {
      acc += r1[k1] * r2[k - k1];
    }
  }
  return acc;
}

}  // namespace

CTable CTable::build(long gmax) {
  if (gmax < 1) {
    throw std::invalid_argument("build_table: gmax must be >= 1, got " +
                                std::to_string(gmax));
  }
  std::vector<std::vector<Rational>> rows(gmax);
  for (long g = 1; g <= gmax; ++g) rows[g - 1].assign(g + 1, Rational(0));
  rows[0][0] = make_ratio(1, 12);

  // Increasing g, and within each g increasing k: the only order compatible
  // with the c_{g,k-1} dependency.
  for (long g = 1; g <= gmax; ++g) {
    for (long k = 0; k <= g; ++k) {
      if (g == 1 && k == 0) continue;
      Rational v(0);
      if (k >= 1) {
        v += make_ratio(g + 1 - k, 5 * g - 2 - k) * rows[g - 1][k - 1];
      }
      if (g >= 2 && k <= g - 1) {
        v += make_ratio((5 * g - 6 - k) * (5 * g - 4 - k), 12) * rows[g - 2][k];
      }
      // Ordered pairs (g1,k1),(g2,k2) with g1,g2 >= 1; out-of-triangle terms
      // are zero and skipped via the k1 bounds.
      v += convolution(rows, g, k) / 2;
      if (sgn(v) <= 0) {
        throw std::logic_error("build_table: positivity violated at g=" +
                               std::to_string(g) + " k=" + std::to_string(k));
      }
      rows[g - 1][k] = std::move(v);
    }
  }

  CTable t;
  t.gmax_ = gmax;
  t.rows_ = std::move(rows);
  return t;
}

CTable CTable::from_rows(std::vector<std::vector<Rational>> rows) {
  const long gmax = static_cast<long>(rows.size());
  if (gmax < 1) throw std::invalid_argument("from_rows: empty table");
  for (long g = 1; g <= gmax; ++g) {
    const auto& row = rows[g - 1];
    if (static_cast<long>(row.size()) != g + 1) {
      throw std::invalid_argument("from_rows: row g=" + std::to_string(g) +
                                  " must hold " + std::to_string(g + 1) +
                                  " entries");
    }
    for (const auto& value : row) {
      if (sgn(value) <= 0) {
        throw std::invalid_argument("from_rows: entries must be positive");
      }
    }
  }
  CTable t;
  t.gmax_ = gmax;
  t.rows_ = std::move(rows);
  return t;
}

const Rational& CTable::lookup(long g, long k) const {
  if (g > gmax_) {
    throw std::out_of_range("lookup: g=" + std::to_string(g) +
                            " exceeds table gmax=" + std::to_string(gmax_) +
                            " (not yet computed)");
  }
  static const Rational kZero(0);
  if (g < 1 || k < 0 || k > g) return kZero;
  return rows_[g - 1][k];
}

CTable CTable::prefix(long new_gmax) const {
  if (new_gmax < 1 || new_gmax > gmax_) {
    throw std::invalid_argument("prefix: need 1 <= new_gmax <= gmax");
  }
  CTable t;
  t.gmax_ = new_gmax;
  t.rows_.assign(rows_.begin(), rows_.begin() + new_gmax);
  return t;
}

bool k0_column_consistent(const CTable& table) {
  for (long g = 2; g <= table.gmax(); ++g) {
    Rational rhs = make_ratio((5 * g - 4) * (5 * g - 6), 12) * table.lookup(g - 1, 0);
    Rational conv(0);
    for (long g1 = 1; g1 < g; ++g1) {
      conv += table.lookup(g1, 0) * table.lookup(g - g1, 0);
    }
    rhs += conv / 2;
    if (rhs != table.lookup(g, 0)) return false;
  }
  return true;
}

}  // namespace mvvol
