// Command-line front end: exact c_{g,k} tables, Masur-Veech volumes,
// large-genus asymptotics and table verification.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mvvol/ctable.hpp"
#include "mvvol/oracles.hpp"
#include "mvvol/psi.hpp"
#include "mvvol/table_io.hpp"
#include "mvvol/volume.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr long kDefaultPrecisionBits = 256;

std::string cache_path_or_env(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("MVVOL_CACHE")) return env;
  return "";
}

// Builds (or loads) a table covering gmax. The cache keeps the largest table
// ever built; a corrupt cache file is reported and recomputed.
mvvol::CTable acquire_table(long gmax, const std::string& cache_flag) {
  const std::string path = cache_path_or_env(cache_flag);
  if (path.empty()) return mvvol::CTable::build(gmax);
  auto [cached, warning] = mvvol::load_table_cache(path);
  if (!warning.empty()) {
    std::cerr << "warning: " << warning << "; recomputing\n";
  }
  if (cached && cached->gmax() >= gmax) return std::move(*cached);
  mvvol::CTable table = mvvol::CTable::build(gmax);
  try {
    mvvol::store_table_cache(path, table);
  } catch (const std::exception& e) {
    std::cerr << "warning: " << e.what() << "; continuing without cache\n";
  }
  return table;
}

int run_table(long gmax, const std::string& format, const std::string& out,
              const std::string& cache_flag) {
  mvvol::CTable table = acquire_table(gmax, cache_flag);
  if (table.gmax() > gmax) table = table.prefix(gmax);
  std::string payload =
      format == "csv" ? mvvol::table_to_csv(table) : mvvol::table_to_json(table) + "\n";
  if (out.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "error: cannot write " << out << "\n";
    return 1;
  }
  file << payload;
  file.flush();
  if (!file) {
    std::cerr << "error: short write to " << out << "\n";
    return 1;
  }
  return 0;
}

int run_volume(long g, long n, bool exact, std::optional<int> digits,
               const std::string& cache_flag) {
  mvvol::CTable table =
      g >= 2 ? acquire_table(g, cache_flag) : mvvol::CTable::build(1);
  mvvol::PiMultiple v = mvvol::volume_exact(table, g, n);
  if (exact || !digits) {
    std::cout << mvvol::render(v) << "\n";
    return 0;
  }
  mvvol::BigReal r = mvvol::stable_eval(v, *digits, kDefaultPrecisionBits);
  std::cout << r.sci(*digits) << "\n";
  std::cerr << "# " << *digits << " stable decimal digits ("
            << r.precision_bits() << "-bit evaluation)\n";
  return 0;
}

int run_asymptotics(long gmax, const std::string& cache_flag) {
  mvvol::CTable table = acquire_table(gmax, cache_flag);
  std::cout << "# g,volume,conjectural,ratio"
               "  (volumes: 7 significant digits; ratio: 6 stable decimals)\n";
  for (long g = 2; g <= gmax; ++g) {
    mvvol::BigReal vol = mvvol::stable_eval(mvvol::volume_exact(table, g, 0), 7,
                                            kDefaultPrecisionBits);
    mvvol::BigReal conj = mvvol::conjectural_volume(g, kDefaultPrecisionBits);
    mvvol::BigReal ratio = mvvol::asymptotic_ratio(table, g, kDefaultPrecisionBits);
    std::cout << g << ',' << vol.sci(7) << ',' << conj.sci(7) << ','
              << ratio.fixed(6) << "\n";
  }
  return 0;
}

int run_verify(long gmax, long dvv_gmax, long diag_gmax, bool as_json,
               const std::string& cache_flag) {
  if (gmax < std::max(dvv_gmax, diag_gmax)) {
    std::cerr << "usage error: --gmax must cover --dvv and --diag\n";
    return kExitUsage;
  }
  mvvol::CTable table = acquire_table(gmax, cache_flag);
  mvvol::VerifyReport report = mvvol::verify_table(table, dvv_gmax, diag_gmax);
  std::cout << (as_json ? report.json() + "\n" : report.text());
  if (!report.anchors_ok) return 2;
  return report.all_pass() ? 0 : 1;
}

int run_psi(long g, const std::string& indices_csv) {
  std::vector<long> indices;
  std::size_t pos = 0;
  try {
    while (pos < indices_csv.size()) {
      std::size_t used = 0;
      indices.push_back(std::stol(indices_csv.substr(pos), &used));
      pos += used;
      if (pos < indices_csv.size()) {
        if (indices_csv[pos] != ',') throw std::invalid_argument(indices_csv);
        ++pos;
      }
    }
  } catch (const std::exception&) {
    std::cerr << "usage error: --indices must be a comma-separated list of "
                 "nonnegative integers\n";
    return kExitUsage;
  }
  mvvol::CorrelatorKey key;
  try {
    key = mvvol::CorrelatorKey::of(g, std::move(indices));
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!key.stable()) {
    std::cerr << "usage error: unstable correlator: (g,n)=(" << g << ","
              << key.indices.size() << ")\n";
    return kExitUsage;
  }
  mvvol::PsiEngine engine;
  mvvol::Rational value;
  try {
    value = engine.evaluate(key);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << value.get_str() << "\n";
  if (!key.dimension_valid()) {
    std::cerr << "# note: dimension constraint sum(d_i) = 3g-3+n violated; "
                 "the value is exactly 0\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact linear Hodge integrals and Masur-Veech volumes"};
  app.require_subcommand(1);

  std::string cache_flag;

  auto* table_cmd = app.add_subcommand("table", "build the c_{g,k} table and emit it");
  long table_gmax = 0;
  std::string table_format = "json";
  std::string table_out;
  table_cmd->add_option("--gmax", table_gmax, "largest genus")->required()
      ->check(CLI::Range(1L, 1000000L));
  table_cmd->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  table_cmd->add_option("--out", table_out, "write to file instead of stdout");
  table_cmd->add_option("--cache", cache_flag,
                        "table cache file (env MVVOL_CACHE)");

  auto* volume_cmd = app.add_subcommand("volume", "Masur-Veech volume V_{g,n}");
  long vol_g = 0;
  long vol_n = 0;
  bool vol_exact = false;
  std::optional<int> vol_digits;
  volume_cmd->add_option("--g", vol_g, "genus")->required();
  volume_cmd->add_option("--n", vol_n, "number of poles")->required();
  auto* exact_flag = volume_cmd->add_flag("--exact", vol_exact,
                                          "print the exact rational * pi^e form (default)");
  volume_cmd->add_option("--digits", vol_digits, "print this many stable decimal digits")
      ->check(CLI::Range(1, 100000))->excludes(exact_flag);
  volume_cmd->add_option("--cache", cache_flag, "table cache file (env MVVOL_CACHE)");

  auto* asym_cmd = app.add_subcommand(
      "asymptotics", "volume vs conjectural large-genus value, g = 2..gmax");
  long asym_gmax = 0;
  asym_cmd->add_option("--gmax", asym_gmax, "largest genus")->required()
      ->check(CLI::Range(2L, 1000000L));
  asym_cmd->add_option("--cache", cache_flag, "table cache file (env MVVOL_CACHE)");

  auto* verify_cmd = app.add_subcommand(
      "verify", "check the table against the DVV and lambda_g oracles");
  long verify_gmax = 8;
  long verify_dvv = 3;
  long verify_diag = 8;
  bool verify_json = false;
  verify_cmd->add_option("--gmax", verify_gmax, "table size to verify");
  verify_cmd->add_option("--dvv", verify_dvv, "check the k=0 column up to this genus");
  verify_cmd->add_option("--diag", verify_diag, "check the diagonal up to this genus");
  verify_cmd->add_flag("--json", verify_json, "emit the machine-readable report");
  verify_cmd->add_option("--cache", cache_flag, "table cache file (env MVVOL_CACHE)");

  auto* psi_cmd = app.add_subcommand("psi", "pure intersection number <tau_{d1}...tau_{dn}>_g");
  long psi_g = 0;
  std::string psi_indices;
  psi_cmd->add_option("--g", psi_g, "genus")->required();
  psi_cmd->add_option("--indices", psi_indices, "comma-separated psi indices")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (table_cmd->parsed()) {
      return run_table(table_gmax, table_format, table_out, cache_flag);
    }
    if (volume_cmd->parsed()) {
      return run_volume(vol_g, vol_n, vol_exact, vol_digits, cache_flag);
    }
    if (asym_cmd->parsed()) return run_asymptotics(asym_gmax, cache_flag);
    if (verify_cmd->parsed()) {
      return run_verify(verify_gmax, verify_dvv, verify_diag, verify_json,
                        cache_flag);
    }
    if (psi_cmd->parsed()) return run_psi(psi_g, psi_indices);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
