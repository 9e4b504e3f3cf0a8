#include <iostream>
#include <string>
#include <vector>

#include "grext/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grext::run(args, std::cout, std::cerr);
}
