#include <iostream>
#include <string>
#include <vector>

#include "odolab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return odolab::cli::dispatch(args, std::cout, std::cerr);
}
