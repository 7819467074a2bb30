#pragma once

#include <string>

namespace ixm {

// Executes a session script: a ring declaration, named ideals/points/schemes,
// and commands (mult, serre-mult, degree, eliminate, bezout, tor). Returns the
// full output; `machine_format` switches to one JSON record per command.
// Throws UserError for bad scripts, InternalError for invariant violations.
std::string run_script(const std::string& source, bool machine_format);

}  // namespace ixm
