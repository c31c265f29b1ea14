#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwa {

/// Batch CLI entry point. Returns the process exit code: 0 on success, 2 on
/// validation failures / non-automorphisms, 1 on internal errors. The report
/// is a single JSON document on `out`; --pretty adds a human-readable
/// rendering on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gwa
