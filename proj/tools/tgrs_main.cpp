#include <iostream>
#include <string>
#include <vector>

#include "tgrs/cli.hpp"

auto main(int argc, char **argv) -> int
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return tgrs::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
