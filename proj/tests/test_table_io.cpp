#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "mvvol/table_io.hpp"

using namespace mvvol;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mvvol-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("fraction parsing") {
  CHECK(parse_fraction("1/12") == make_ratio(1, 12));
  CHECK(parse_fraction("-3/4") == make_ratio(-3, 4));
  CHECK(parse_fraction("7") == Rational(7));
  CHECK(parse_fraction("0") == 0);
  CHECK(to_fraction(parse_fraction("49/288")) == "49/288");
  CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction(" 1/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("2/4"), std::invalid_argument);   // not lowest terms
  CHECK_THROWS_AS(parse_fraction("1/-2"), std::invalid_argument);  // sign in den
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("a/b"), std::invalid_argument);
}

TEST_CASE("json document shape") {
  auto doc = nlohmann::json::parse(table_to_json(CTable::build(2)));
  CHECK(doc.at("version").get<int>() == 1);
  CHECK(doc.at("gmax").get<long>() == 2);
  CHECK(doc.at("rows").size() == 2);
  CHECK(doc.at("rows")[0].at("g").get<long>() == 1);
  CHECK(doc.at("rows")[0].at("c") == nlohmann::json({"1/12", "1/24"}));
  CHECK(doc.at("rows")[1].at("c") == nlohmann::json({"49/288", "5/48", "7/384"}));
}

TEST_CASE("csv rows") {
  CHECK(table_to_csv(CTable::build(1)) == "1,0,1,12\n1,1,1,24\n");
  std::string csv = table_to_csv(CTable::build(2));
  CHECK(csv.find("2,2,7,384\n") != std::string::npos);
}

TEST_CASE("json round trip is exact") {
  for (long gmax : {1L, 2L, 5L, 10L}) {
    CTable t = CTable::build(gmax);
    CHECK(table_from_json(table_to_json(t)) == t);
  }
}

TEST_CASE("serialization is deterministic") {
  CHECK(table_to_json(CTable::build(9)) == table_to_json(CTable::build(9)));
}

TEST_CASE("strict parse rejects corrupted documents") {
  std::string good = table_to_json(CTable::build(3));
  auto corrupt = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(table_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(table_from_json(good.substr(0, good.size() / 2)),
                  std::runtime_error);
  CHECK_THROWS_AS(table_from_json(corrupt("\"version\":1", "\"version\":2")),
                  std::runtime_error);
  CHECK_THROWS_AS(table_from_json(corrupt("\"gmax\":3", "\"gmax\":4")),
                  std::runtime_error);
  CHECK_THROWS_AS(table_from_json(corrupt("\"1/24\"", "\"2/48\"")),
                  std::runtime_error);
  CHECK_THROWS_AS(table_from_json(corrupt("\"1/24\"", "\"-1/24\"")),
                  std::runtime_error);
  CHECK_THROWS_AS(table_from_json(corrupt("\"1/12\",", "")),
                  std::runtime_error);
  // a parseable document with a wrong (but well-formed) value is accepted
  // here; catching it is verify_table's job
  CHECK_NOTHROW(table_from_json(corrupt("\"7/384\"", "\"391/384\"")));
}

TEST_CASE("cache load and store") {
  TempDir dir;
  fs::path file = dir.path / "table.json";

  auto missing = load_table_cache(file);
  CHECK_FALSE(missing.table.has_value());
  CHECK(missing.warning.empty());

  CTable t = CTable::build(6);
  store_table_cache(file, t);
  auto loaded = load_table_cache(file);
  REQUIRE(loaded.table.has_value());
  CHECK(*loaded.table == t);
  CHECK(loaded.warning.empty());
  CHECK_FALSE(fs::exists(dir.path / "table.json.tmp"));

  std::ofstream(file, std::ios::trunc) << "garbage{";
  auto corrupt = load_table_cache(file);
  CHECK_FALSE(corrupt.table.has_value());
  CHECK(corrupt.warning.find("cache corrupt") != std::string::npos);

  CHECK_THROWS_AS(store_table_cache(dir.path / "no-such-dir" / "t.json", t),
                  std::runtime_error);
}
