#include <cstdlib>
#include <iostream>

#include "cli/commands.hpp"
#include "cli/job.hpp"

int main(int argc, char** argv) {
  nll::cli::JobSpec spec;
  try {
    spec = nll::cli::parse_command_line(argc, argv, std::getenv("LL_PRIME"));
  } catch (const nll::cli::UsageError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  const nll::cli::CommandResult result = nll::cli::run(spec);
  std::cout << result.report.dump(2) << "\n";
  if (spec.pretty || result.exit_code == 1) std::cerr << result.table;
  return result.exit_code;
}
