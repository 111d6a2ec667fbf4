#ifndef PSS_CLI_HPP
#define PSS_CLI_HPP

#include <string>
#include <vector>

#include "pss/batch.hpp"

namespace pss
{

struct CliRequest
{
  enum class Action
  {
    run,
    list_problems,
    help,
  };

  Action action = Action::run;
  ExperimentConfig config;
  bool quiet = false;
  std::string help_text;
};

/**
 * Parse pss-bench arguments (argv[0] is the program name).
 *
 * Required for a run: --problem, --iters, --runs. Defaults: --alpha 0.95,
 * --pop 30, --seed 0, --format csv, --jobs 0 (all processors). Throws
 * UsageError on unknown flags, missing required flags, malformed numbers
 * and out-of-range values.
 */
CliRequest parse_cli(const std::vector<std::string>& args);

/// Entry point shared by the pss-bench binary and the CLI tests. Returns the exit status.
int run_cli(const std::vector<std::string>& args);

}  // namespace pss

#endif  // PSS_CLI_HPP
