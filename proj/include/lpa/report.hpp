#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpa/scalar.hpp"

namespace lpa {

struct RunConfig {
  Field field = Field::rationals();
  std::size_t bound = 3;
  std::size_t depth = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool json = false;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string detail;  // certificate digest / explanation, may be empty
};

struct Report {
  std::string command;
  std::map<std::string, std::string> config;
  std::vector<CheckRecord> records;

  bool pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  void add(std::string name, bool ok, std::string detail = "") {
    records.push_back({std::move(name), ok, std::move(detail)});
  }

  static std::map<std::string, std::string> echo(const RunConfig& c);

  // Aligned-table text rendering; header only when there are no records.
  std::string text() const;
  // Deterministic: same report, same bytes. Round-trips through from_json.
  std::string json() const;
  static Report from_json(const std::string& text);
};

}  // namespace lpa
