#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "refdefect/refcover.hpp"

namespace refdefect {

/// Malformed config file or report input: maps to CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json jordan_to_json(const JordanSpec& spec);
JordanSpec jordan_from_json(const nlohmann::json& j);

nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DefectReport& rep);

struct CaseConfig {
  OperatorFamily family = OperatorFamily::derivation;
  JordanSpec a, b;
  std::vector<int> ks;
  bool with_primal = false;
  int budget = 300;
  std::uint64_t seed = 0;
};

struct SweepConfig {
  int n_max = 1;
  std::vector<Scalar> eigen_pool;
  std::vector<OperatorFamily> families;
  int k_max = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool with_primal = false;
  int budget = 300;
};

CaseConfig case_config_from_json(const nlohmann::json& j, std::uint64_t default_seed);
SweepConfig sweep_config_from_json(const nlohmann::json& j, std::uint64_t default_seed);

nlohmann::json load_json_file(const std::string& path);

}  // namespace refdefect
