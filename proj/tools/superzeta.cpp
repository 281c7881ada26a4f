#include <iostream>
#include <string>
#include <vector>

#include "szeta/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return szeta::cli::run(args, std::cout, std::cerr);
}
