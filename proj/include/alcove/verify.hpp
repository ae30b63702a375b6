#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace alcove {

using Json = nlohmann::ordered_json;

struct CheckRow {
  std::string suite;
  std::string identity;
  Json params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // exception text when the check could not run
  Json detail;        // lhs/rhs for single sum-against-product checks
};

struct SuiteConfig {
  int N = 1;
  int M = 1;
  double g = 1.0;
  double tol = 1e-10;  // rows scale their own tolerance by tol / 1e-10
  std::uint64_t seed = 20240611;
};

const std::vector<std::string>& suite_names();  // all, aim, macdonald, model, transform, rank-one, classical

// Throws InvalidArgument for an unknown suite name.
std::vector<CheckRow> verify_suite(const std::string& which, const SuiteConfig& cfg);

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace alcove
