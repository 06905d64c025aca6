#include <iostream>
#include <string>
#include <vector>

#include "jacobi_walk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jacobi_walk::cli::run(args, std::cout, std::cerr);
}
