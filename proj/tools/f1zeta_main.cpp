#include <iostream>
#include <string>
#include <vector>

#include "f1zeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return f1zeta::cli::run(args, std::cout, std::cerr);
}
