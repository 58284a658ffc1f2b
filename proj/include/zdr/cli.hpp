#ifndef ZDR_CLI_HPP_
#define ZDR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace zdr::cli {

  // Exit codes.
  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_failure      = 1;  // verify: some claim failed; iso: not isomorphic
  inline constexpr int exit_unrealizable = 2;  // screen: some condition failed
  inline constexpr int exit_timeout      = 3;
  inline constexpr int exit_limit        = 4;
  inline constexpr int exit_bad_input    = 64;

  // args excludes the program name. A path of "-" reads standard input.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace zdr::cli

#endif  // ZDR_CLI_HPP_
