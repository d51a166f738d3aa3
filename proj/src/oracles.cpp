#include "mvvol/oracles.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mvvol/psi.hpp"

namespace mvvol {

BernoulliCache::BernoulliCache(long upto) {
  if (upto < 2 || upto % 2 != 0) {
    throw std::invalid_argument("bernoulli: upto must be even and >= 2");
  }
  values_.resize(upto + 1);
  values_[0] = Rational(1);
  Integer binom;
  for (long m = 1; m <= upto; ++m) {
    Rational s(0);
    for (long j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                   static_cast<unsigned long>(j));
      s += binom * values_[j];
    }
    values_[m] = -s / (m + 1);
  }
}

const Rational& BernoulliCache::at(long m) const {
  if (m < 0 || m >= static_cast<long>(values_.size())) {
    throw std::out_of_range("bernoulli: index beyond cache");
  }
  return values_[m];
}

Rational lambda_g_diagonal(long g) {
  if (g < 1) throw std::invalid_argument("lambda_g_diagonal: g must be >= 1");
  if (g == 1) return make_ratio(1, 24);
  return lambda_g_diagonal(g, BernoulliCache(2 * g));
}

Rational lambda_g_diagonal(long g, const BernoulliCache& bernoulli) {
  if (g < 1) throw std::invalid_argument("lambda_g_diagonal: g must be >= 1");
  if (g == 1) return make_ratio(1, 24);
  Integer fac;
  // one-point value <tau_{2g-2} lambda_g> = (2^{2g-1}-1)/2^{2g-1} |B_2g|/(2g)!
  Integer p2(1);
  p2 <<= 2 * g - 1;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(2 * g));
  Rational one_point = make_ratio(p2 - 1, p2 * fac) * abs(bernoulli.at(2 * g));
  // <tau_2^{2g-3} lambda_g> = (4g-6)!/2^{2g-3} * one-point
  Integer p2m(1);
  p2m <<= 2 * g - 3;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(4 * g - 6));
  Rational tau2_power = make_ratio(fac, p2m) * one_point;
  // c_{g,g} = (4g-3)(4g-5) <tau_2^{2g-3} lambda_g> / (2g-3)!
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(2 * g - 3));
  return (4 * g - 3) * (4 * g - 5) * tau2_power / fac;
}

bool VerifyReport::all_pass() const {
  if (!anchors_ok) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.pass; });
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "anchors: " << (anchors_ok ? "ok" : "FAILED") << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << " g=" << c.g
        << " k=" << c.k << " expected " << c.expected << " actual " << c.actual;
    if (!c.pass) out << " delta " << c.delta;
    out << "\n";
  }
  long failed = std::count_if(checks.begin(), checks.end(),
                              [](const VerifyCheck& c) { return !c.pass; });
  out << "checks: " << checks.size() << ", failed: " << failed << "\n";
  return out.str();
}

std::string VerifyReport::json() const {
  nlohmann::json doc;
  doc["anchors_ok"] = anchors_ok;
  doc["all_pass"] = all_pass();
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"g", c.g},
                   {"k", c.k},
                   {"expected", c.expected},
                   {"actual", c.actual},
                   {"delta", c.delta},
                   {"pass", c.pass}});
  }
  doc["checks"] = arr;
  return doc.dump();
}

VerifyReport verify_table(const CTable& table, long dvv_gmax, long diag_gmax) {
  if (table.gmax() < std::max(dvv_gmax, diag_gmax)) {
    throw std::invalid_argument("verify_table: table too small for requested checks");
  }
  VerifyReport report;
  PsiEngine engine(std::max<std::size_t>(PsiEngine::kDefaultInsertionCap,
                                         static_cast<std::size_t>(3 * dvv_gmax + 1)));
  report.anchors_ok = engine.anchors_ok();
  if (!report.anchors_ok) return report;  // abort: the oracle is miscalibrated

  Integer fac;
  for (long g = 2; g <= dvv_gmax; ++g) {
    std::vector<long> idx(static_cast<std::size_t>(3 * g + 1), 2);
    idx[0] = idx[1] = 0;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(3 * g - 1));
    Rational expected = engine.evaluate(CorrelatorKey::of(g, idx)) / fac;
    const Rational& actual = table.lookup(g, 0);
    report.checks.push_back({"dvv-column", g, 0, to_fraction(expected),
                             to_fraction(actual),
                             to_fraction(actual - expected),
                             actual == expected});
  }
  if (diag_gmax >= 1) {
    BernoulliCache bernoulli(std::max(2 * diag_gmax, 2L));
    for (long g = 1; g <= diag_gmax; ++g) {
      Rational expected = lambda_g_diagonal(g, bernoulli);
      const Rational& actual = table.lookup(g, g);
      report.checks.push_back({"lambda-g-diagonal", g, g, to_fraction(expected),
                               to_fraction(actual),
                               to_fraction(actual - expected),
                               actual == expected});
    }
  }
  return report;
}

}  // namespace mvvol
