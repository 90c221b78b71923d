#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgrs {

enum ExitCode : int
{
  exit_ok           = 0,
  exit_verification = 1,
  exit_input        = 2,
};

// Runs the command line `args` (program name excluded); reads stdin only when
// no --input is given.
auto run_cli(std::vector<std::string> args, std::istream &in, std::ostream &out, std::ostream &err) -> int;

} // namespace tgrs
