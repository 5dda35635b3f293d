#include <iostream>

#include "aperykit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aperykit::cli::run(args, std::cout, std::cerr);
}
