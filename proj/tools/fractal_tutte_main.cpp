#include <iostream>
#include <string>
#include <vector>

#include "fractal_tutte/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fractal_tutte::run_cli(args, std::cout, std::cerr);
}
