#ifndef RINGSUM_COMMANDS_HPP
#define RINGSUM_COMMANDS_HPP

#include "ringsum/session.hpp"

namespace ringsum {

// Shared implementation of the engine commands; the CLI and the python
// module are thin layers over these.  Exit codes: 0 success, 1 no solution
// (a mathematically valid negative), 2 user error, 3 cap exceeded; errors of
// classes 2/3 are raised as exceptions by the functions themselves.
struct CommandOptions {
    unsigned zeta = 4;
    std::vector<std::string> params;
    long lambdaCap = 4096;
    long maxOrder = 4;
    long verifyLo = 1;
    long verifyHi = 40;
    std::vector<std::string> extra;
};

struct CommandResult {
    Json doc;
    int exitCode = 0;
};

CommandResult cmd_telescope(const CommandOptions& opt, const std::string& input);
CommandResult cmd_rewrite_product(const CommandOptions& opt, const std::string& input);
CommandResult cmd_zeilberger(const CommandOptions& opt, const std::string& input);
CommandResult cmd_order(const CommandOptions& opt, const std::string& input);
CommandResult cmd_verify(const CommandOptions& opt, const std::string& lhs,
                         const std::string& rhs, const std::string& var);
CommandResult cmd_describe(const CommandOptions& opt, const std::string& input);

} // namespace ringsum

#endif
