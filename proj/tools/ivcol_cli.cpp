#include <iostream>
#include <string>
#include <vector>

#include "ivcol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ivcol::cli_dispatch(args, std::cin, std::cout, std::cerr);
}
