#ifndef PMP_CLI_HPP
#define PMP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pmp {

// Dispatch one command line (without the program name). Returns the exit
// status: 0 success, 1 domain error, 2 usage error. Output is
// byte-deterministic for fixed inputs.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace pmp

#endif
