#include <iostream>

#include "relpat_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return relpat::cli::run(args, std::cout, std::cerr);
}
