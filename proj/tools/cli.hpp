#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lamina {

// Runs one command line (without the program name). Domain output goes to
// `out`, diagnostics to `err`. Returns 0 on success, 1 on domain errors and
// 2 on usage errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamina
