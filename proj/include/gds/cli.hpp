#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gds::cli {

/// Runs one gdsctl command line (without the program name). Returns the exit
/// status: 0 on success and when every requested certificate passes, 1 when a
/// certificate fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gds::cli
