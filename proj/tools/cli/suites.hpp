#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borelkit/io.hpp"

namespace borelkit::cli {

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::string size;
  int instances = 0;
  int checks = 0;
  int mismatches = 0;
  int resource_errors = 0;
  Json details = Json::array();       // first mismatches, with inputs and both values
  Json observations = Json::object(); // recorded, never asserted

  Json to_json() const;
};

const std::vector<std::string>& suite_names();  // without "all"

// Runs one named suite on seeded random instances. Deterministic in (name, seed, size).
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const std::string& size);

}  // namespace borelkit::cli
