#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mvvol/ctable.hpp"

namespace mvvol {

inline constexpr int kTableDocVersion = 1;

// JSON document {"version":1,"gmax":G,"rows":[{"g":1,"c":["1/12","1/24"]},...]}
// with lowest-terms base-10 fraction strings. Deterministic: two builds of
// the same gmax serialize to bit-identical strings.
std::string table_to_json(const CTable& table);

// One line per triangle entry: g,k,numerator,denominator (no header).
std::string table_to_csv(const CTable& table);

// Strict parse of the JSON document; throws std::runtime_error on any
// structural or content violation (wrong version, malformed fractions,
// fractions not in lowest terms, missing entries, nonpositive values).
CTable table_from_json(const std::string& text);

struct CacheLoad {
  std::optional<CTable> table;
  std::string warning;  // nonempty iff the file existed but was corrupt
};

// Missing file -> {nullopt, ""}. Corrupt file -> {nullopt, warning}.
CacheLoad load_table_cache(const std::filesystem::path& path);

// Atomic write-then-rename; throws std::runtime_error on I/O failure.
void store_table_cache(const std::filesystem::path& path, const CTable& table);

}  // namespace mvvol
