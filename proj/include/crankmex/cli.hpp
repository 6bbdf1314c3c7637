#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crankmex::cli {

/// Runs the command line; returns 0 when every check passes, 1 when one
/// fails, 2 on a usage error. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Suite names accepted by `verify`, in report order (without "all").
const std::vector<std::string>& suite_names();

}  // namespace crankmex::cli
