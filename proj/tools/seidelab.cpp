#include <iostream>
#include <string>
#include <vector>

#include "seidelab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return seidelab::run_cli(args, std::cout, std::cerr);
}
