#include "mvvol/psi.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mvvol/hodge.hpp"

namespace mvvol {

CorrelatorKey CorrelatorKey::of(long g, std::vector<long> indices) {
  if (g < 0) throw std::invalid_argument("correlator: genus must be >= 0");
  for (long d : indices) {
    if (d < 0) throw std::invalid_argument("correlator: psi indices must be >= 0");
  }
  std::sort(indices.begin(), indices.end());
  return CorrelatorKey{g, std::move(indices)};
}

bool CorrelatorKey::stable() const {
  const std::size_t n = indices.size();
  if (g == 0) return n >= 3;
  if (g == 1) return n >= 1;
  return true;
}

bool CorrelatorKey::dimension_valid() const {
  const long sum = std::accumulate(indices.begin(), indices.end(), 0L);
  return sum == 3 * g - 3 + static_cast<long>(indices.size());
}

std::size_t CorrelatorKeyHash::operator()(const CorrelatorKey& k) const {
  // FNV-1a over the genus and the sorted indices
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::size_t>(k.g));
  for (long d : k.indices) mix(static_cast<std::size_t>(d) + 0x9e3779b9u);
  return h;
}

PsiEngine::PsiEngine(std::size_t insertion_cap) : cap_(insertion_cap) {}

Rational PsiEngine::evaluate(const CorrelatorKey& key) {
  if (!key.stable()) {
    throw std::invalid_argument("psi_intersection: unstable correlator (g,n)");
  }
  if (key.indices.size() > cap_) {
    throw std::invalid_argument("psi_intersection: more than " +
                                std::to_string(cap_) + " insertions");
  }
  return eval(key.g, key.indices);
}

bool PsiEngine::anchors_ok() {
  struct Anchor {
    long g;
    std::vector<long> idx;
    Rational want;
  };
  const Anchor anchors[] = {
      {0, {0, 0, 0}, Rational(1)},
      {1, {1}, make_ratio(1, 24)},
      {1, {0, 2}, make_ratio(1, 24)},
      {2, {4}, make_ratio(1, 1152)},
      {2, {2, 2, 2}, make_ratio(7, 240)},
  };
  for (const auto& a : anchors) {
    if (eval(a.g, a.idx) != a.want) return false;
  }
  return true;
}

Rational PsiEngine::eval(long g, std::vector<long> idx) {
  const long n = static_cast<long>(idx.size());
  if (g < 0) return Rational(0);
  if ((g == 0 && n <= 2) || (g == 1 && n == 0)) return Rational(0);  // unstable
  const long dim_sum = std::accumulate(idx.begin(), idx.end(), 0L);
  if (dim_sum != 3 * g - 3 + n) return Rational(0);
  if (g == 0 && n == 3) return Rational(1);  // <tau_0^3>_0; only key at dim 0
  if (g == 1 && n == 1) return make_ratio(1, 24);  // seed <tau_1>_1

  CorrelatorKey key{g, idx};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Rational value(0);
  if (idx.front() == 0) {
    // string equation: remove the tau_0, lower one remaining index
    std::vector<long> rest(idx.begin() + 1, idx.end());
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      std::vector<long> sub = rest;
      sub[j] -= 1;
      std::sort(sub.begin(), sub.end());
      value += eval(g, std::move(sub));
    }
  } else if (idx.front() == 1) {
    // dilaton equation
    std::vector<long> rest(idx.begin() + 1, idx.end());
    value = (2 * g - 2 + n - 1) * eval(g, std::move(rest));
  } else {
    // DVV recursion on the largest index k+1
    const long k = idx.back() - 1;
    std::vector<long> rest(idx.begin(), idx.end() - 1);
    const std::size_t m = rest.size();
    for (std::size_t j = 0; j < m; ++j) {
      const long dj = rest[j];
      std::vector<long> sub = rest;
      sub[j] = k + dj;
      std::sort(sub.begin(), sub.end());
      value += make_ratio(double_factorial(2 * (k + dj) + 1),
                          double_factorial(2 * dj - 1)) *
               eval(g, std::move(sub));
    }
    Rational half(0);
    for (long a = 0; a <= k - 1; ++a) {
      const long b = k - 1 - a;
      const Integer coef = double_factorial(2 * a + 1) * double_factorial(2 * b + 1);
      {
        std::vector<long> sub = rest;
        sub.push_back(a);
        sub.push_back(b);
        std::sort(sub.begin(), sub.end());
        half += coef * eval(g - 1, std::move(sub));
      }
      // splitting over ordered genus pairs and ordered subsets of the
      // remaining labeled insertions
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<long> left{a};
        std::vector<long> right{b};
        for (std::size_t i = 0; i < m; ++i) {
          (mask >> i & 1u ? left : right).push_back(rest[i]);
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        for (long g1 = 0; g1 <= g; ++g1) {
          Rational lhs = eval(g1, left);
          if (sgn(lhs) == 0) continue;
          half += coef * lhs * eval(g - g1, right);
        }
      }
    }
    value += half / 2;
    value /= Rational(double_factorial(2 * k + 3));
  }

  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace mvvol
