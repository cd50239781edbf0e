#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nll/presentation.hpp"

namespace nll::cli {

// Bad command line or job file; reported with exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SurveyGrid {
  int min_degree = 2;
  int max_degree = 4;
  std::size_t random_n2 = 0;
  bool include_monomial = false;
};

struct JobSpec {
  std::string command;
  std::vector<int> a;
  std::vector<int> b;
  // entries[j][i] as polynomial text; seeded draw when absent
  std::optional<std::vector<std::vector<std::string>>> matrix;
  std::uint64_t seed = 1;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::optional<std::array<std::int64_t, 3>> line;
  std::size_t samples = 20;
  bool pretty = false;
  SurveyGrid grid;
  unsigned workers = 0;  // 0: hardware concurrency

  DegreeData degrees() const;
};

// argv[0] is skipped. `env_prime` is the value of LL_PRIME, if set; an
// explicit --prime wins over it.
JobSpec parse_command_line(int argc, const char* const* argv,
                           const char* env_prime = nullptr);

// {"a": [...], "b": [...], "seed": N} or {"a": ..., "b": ..., "matrix": [[...]]}
void apply_job_document(const std::string& json_text, JobSpec& spec);
std::vector<std::vector<std::string>> parse_matrix_document(const std::string& json_text);

std::vector<int> parse_csv_ints(const std::string& text);

}  // namespace nll::cli
