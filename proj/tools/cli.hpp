#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewbox::cli {

// Dispatches the skewbox subcommands (summarise, simulate, render,
// sepd-check). Returns the process exit status: 0 success, 1 usage or
// configuration error, 2 partial failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewbox::cli
