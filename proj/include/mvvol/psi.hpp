#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "mvvol/rational.hpp"

namespace mvvol {

// (genus, sorted psi-indices) naming the pure intersection number
// <tau_{d1} ... tau_{dn}>_g. The value is nonzero only when
// sum d_i = 3g-3+n and (g,n) is stable.
struct CorrelatorKey {
  long g = 0;
  std::vector<long> indices;  // sorted ascending, all >= 0

  // Sorts the indices; throws std::invalid_argument on negative g or d_i.
  static CorrelatorKey of(long g, std::vector<long> indices);

  bool stable() const;          // (g,n) not in {(0,0),(0,1),(0,2),(1,0)}
  bool dimension_valid() const; // sum d_i == 3g-3+n

  bool operator==(const CorrelatorKey&) const = default;
};

struct CorrelatorKeyHash {
  std::size_t operator()(const CorrelatorKey& k) const;
};

// Memoizing evaluator for <tau_{d1}...tau_{dn}>_g from the seeds
// <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24, using the string equation, the
// dilaton equation and the DVV form of the Virasoro constraints on the
// largest index:
//
//   (2k+3)!! <tau_{k+1} prod_j tau_{dj}>_g =
//       sum_j (2(k+dj)+1)!!/(2dj-1)!! <tau_{k+dj} prod_{i!=j}>_g
//     + 1/2 sum_{a+b=k-1} (2a+1)!!(2b+1)!!
//         [ <tau_a tau_b prod_j>_{g-1}
//           + sum_{g1+g2=g, I|J = rest} <tau_a tau_I>_{g1} <tau_b tau_J>_{g2} ]
//
// with unstable sub-correlators contributing 0. Evaluation is confined to one
// execution context; the memo store is not synchronized.
class PsiEngine {
 public:
  static constexpr std::size_t kDefaultInsertionCap = 13;

  explicit PsiEngine(std::size_t insertion_cap = kDefaultInsertionCap);

  // Exact <tau_{d1}...tau_{dn}>_g; exact 0 for dimension-violating keys.
  // Throws std::invalid_argument for unstable keys and for keys with more
  // than insertion_cap insertions.
  Rational evaluate(const CorrelatorKey& key);

  // Validates the normalization against fixed anchor values before the
  // engine is used for verification:
  //   <tau_0^3>_0 = 1, <tau_1>_1 = 1/24, <tau_0 tau_2>_1 = 1/24,
  //   <tau_4>_2 = 1/1152, <tau_2^3>_2 = 7/240.
  bool anchors_ok();

  std::size_t insertion_cap() const { return cap_; }
  std::size_t cache_size() const { return memo_.size(); }

 private:
  Rational eval(long g, std::vector<long> idx);

  std::size_t cap_;
  std::unordered_map<CorrelatorKey, Rational, CorrelatorKeyHash> memo_;
};

}  // namespace mvvol
