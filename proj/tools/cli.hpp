#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kempe::cli {

/// Runs one subcommand. Machine output (JSON) goes to `out` unless -o names a
/// file; summaries and diagnostics go to `err`. Returns 0 on success, 1 on
/// domain errors, 2 on usage errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kempe::cli
