#ifndef H4_CLI_HPP
#define H4_CLI_HPP

#include <iosfwd>

namespace h4 {

/// Exit status: 0 analysis completed (verdicts are payload), 1 resource cap
/// reached, 2 input error, 3 an internal consistency check failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitResource = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Commands: construct, verify, analyze, iso, aut, codim, codim-table, exists-alt.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace h4

#endif  // H4_CLI_HPP
