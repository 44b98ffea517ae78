#include <iostream>
#include <string>
#include <vector>

#include "pctaxicab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pct::run_cli(args, std::cout, std::cerr);
}
