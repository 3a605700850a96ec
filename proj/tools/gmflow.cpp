#include <iostream>
#include <string>
#include <vector>

#include "gmflow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gmflow::cli::run(args, std::cout, std::cerr);
}
