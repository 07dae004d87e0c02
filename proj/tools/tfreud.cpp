#include <iostream>
#include <string>
#include <vector>

#include "tfreud/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tfreud::run_cli(args, std::cout, std::cerr);
}
