#include <iostream>
#include <string>
#include <vector>

#include "ddc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ddc::cli_run(args, std::cout, std::cerr);
}
