#include <iostream>
#include <string>
#include <vector>

#include "ipaac/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ipaac::run_cli(args, std::cout, std::cerr);
}
