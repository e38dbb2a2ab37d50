#include <iostream>
#include <string>
#include <vector>

#include "dedekind/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dedekind::cli::run(args, std::cout, std::cerr);
}
