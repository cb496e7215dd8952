#pragma once

// Named verification suites over a theory spec. Every check draws its random
// samples from its own generator seeded by check_seed(master, name), so the
// results do not depend on which other checks run or in what order.

#include <cstdint>
#include <string>
#include <vector>

#include "gpt/cli/report.hpp"
#include "gpt/cli/spec_file.hpp"

namespace gpt::cli {

/// splitmix64(master ^ fnv1a64(name)).
std::uint64_t check_seed(std::uint64_t master, const std::string& name);

/// core, norms, infodim, table1, faithful, gns, born, all.
const std::vector<std::string>& suite_names();

struct RunOptions {
  bool timing = false;
  /// Samples per property check.
  int samples = 100;
};

/// Throws UnknownSuite. Checks that need the quantum backend report status
/// error on the classical one.
Report run_suite(const TheorySpec& spec, const std::string& suite, const RunOptions& options = {});

std::string version();

}  // namespace gpt::cli
