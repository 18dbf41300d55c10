#pragma once

#include <iosfwd>

#include "machfvm/config.hpp"

namespace machfvm {

/// Executes a validated configuration and writes its CSV artifact to the
/// configured output path. Returns the process exit code: 0 on success,
/// 1 on solver failure (a partial artifact is still written), 2 on
/// configuration errors.
int run(const RunConfig& config);

/// Same, but writes the artifact to the given stream (testing hook).
/// Returns 0 on success, 1 on solver failure.
int run_to_stream(const RunConfig& config, std::ostream& os);

}  // namespace machfvm
