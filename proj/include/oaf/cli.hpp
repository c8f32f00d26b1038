#ifndef OAF_CLI_HPP
#define OAF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oaf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // kernel, import or morphism failures
inline constexpr int kFormatError = 2;  // usage, I/O, format, unresolved names, empty output

// Runs one command. `args` excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oaf::cli

#endif  // OAF_CLI_HPP
