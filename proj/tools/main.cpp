#include <iostream>
#include <string>
#include <vector>

#include "spinvol/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spinvol::run_cli(args, std::cout, std::cerr);
}
