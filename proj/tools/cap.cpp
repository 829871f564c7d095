#include <iostream>

#include "cap_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cap::cli::run(std::move(args), std::cout, std::cerr);
}
