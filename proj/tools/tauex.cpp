#include <iostream>
#include <string>
#include <vector>

#include "tauex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tauex::run_cli(args, std::cout, std::cerr);
}
