#ifndef SHYLAB_CLI_HPP
#define SHYLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace shylab {

// Runs the command-line tool on argv-style arguments (program name already
// stripped), writing to the given streams. Returns the process exit code:
// 0 when the checked property holds, 1 when it fails, 2 on bad input or
// usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shylab

#endif
