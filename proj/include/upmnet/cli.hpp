#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace upmnet {

/// Exit status: 0 positive verdict or success, 1 negative verdict, 2 bad
/// input. JSON goes to `out`, diagnostics to `err`. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace upmnet
