#include <iostream>
#include <string>
#include <vector>

#include "asdimlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return asdimlab::cli::run(args, std::cout, std::cerr);
}
