#include "mvvol/table_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mvvol {

std::string table_to_json(const CTable& table) {
  nlohmann::json doc;
  doc["version"] = kTableDocVersion;
  doc["gmax"] = table.gmax();
  auto rows = nlohmann::json::array();
  for (long g = 1; g <= table.gmax(); ++g) {
    auto c = nlohmann::json::array();
    for (long k = 0; k <= g; ++k) c.push_back(to_fraction(table.lookup(g, k)));
    rows.push_back({{"g", g}, {"c", c}});
  }
  doc["rows"] = rows;
  return doc.dump();
}

std::string table_to_csv(const CTable& table) {
  std::ostringstream out;
  for (long g = 1; g <= table.gmax(); ++g) {
    for (long k = 0; k <= g; ++k) {
      const Rational& c = table.lookup(g, k);
      out << g << ',' << k << ',' << c.get_num().get_str() << ','
          << c.get_den().get_str() << '\n';
    }
  }
  return out.str();
}

CTable table_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("table document: parse failure: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw std::runtime_error("top level must be an object");
    const int version = doc.at("version").get<int>();
    if (version != kTableDocVersion) {
      throw std::runtime_error("unsupported version " + std::to_string(version));
    }
    const long gmax = doc.at("gmax").get<long>();
    const auto& rows = doc.at("rows");
    if (!rows.is_array() || static_cast<long>(rows.size()) != gmax) {
      throw std::runtime_error("rows must hold exactly gmax entries");
    }
    std::vector<std::vector<Rational>> values;
    values.reserve(rows.size());
    for (long g = 1; g <= gmax; ++g) {
      const auto& row = rows[g - 1];
      if (row.at("g").get<long>() != g) {
        throw std::runtime_error("row " + std::to_string(g) + " mislabeled");
      }
      const auto& c = row.at("c");
      if (!c.is_array() || static_cast<long>(c.size()) != g + 1) {
        throw std::runtime_error("row g=" + std::to_string(g) + " must hold " +
                                 std::to_string(g + 1) + " fractions");
      }
      std::vector<Rational> parsed;
      parsed.reserve(c.size());
      for (const auto& f : c) parsed.push_back(parse_fraction(f.get<std::string>()));
      values.push_back(std::move(parsed));
    }
    return CTable::from_rows(std::move(values));
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("table document: ") + e.what());
  }
}

CacheLoad load_table_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {std::nullopt, ""};
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return {table_from_json(buf.str()), ""};
  } catch (const std::exception& e) {
    return {std::nullopt, std::string("cache corrupt (") + e.what() + ")"};
  }
}

void store_table_cache(const std::filesystem::path& path, const CTable& table) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << table_to_json(table);
    out.flush();
    if (!out) throw std::runtime_error("cache: short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cache: cannot move into place: " + path.string());
  }
}

}  // namespace mvvol
