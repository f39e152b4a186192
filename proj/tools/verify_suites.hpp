#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gcdperm::cli {

// Zero means "use the suite's default".
struct SuiteParams {
  std::uint64_t a = 0;
  std::uint64_t limit = 0;
  std::uint64_t n = 0;
  std::uint64_t bound = 0;
  std::uint64_t max_terms = 50'000'000;
  unsigned threads = 0;
};

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
};

const std::vector<SuiteInfo>& suites();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite, ResourceLimitError when a
/// parameter exceeds max_terms.
std::vector<CheckLine> run_suite(const std::string& name, const SuiteParams& params);

void print_table(std::ostream& out, const std::string& suite, const std::vector<CheckLine>& lines);

}  // namespace gcdperm::cli
