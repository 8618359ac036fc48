#ifndef NLNF_CLI_SUITES_HPP
#define NLNF_CLI_SUITES_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nlnf_cli/json_io.hpp"

namespace nlnf::cli {

/// Missing or unreadable fixtures, unknown suite names.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::filesystem::path fixtures;
  /// Series bound for the Dirichlet suite; 0 takes the fixture's value.
  std::size_t bound = 0;
};

struct SuiteResult {
  std::vector<CheckReport> checks;
  bool ok() const;
  /// 0 when every check passed, 1 otherwise.
  int exit_code() const { return ok() ? 0 : 1; }
  json to_json(const std::string& name, const SuiteOptions& options) const;
  std::string summary(const std::string& name) const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite or "all". Throws config_error.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace nlnf::cli

#endif  // NLNF_CLI_SUITES_HPP
