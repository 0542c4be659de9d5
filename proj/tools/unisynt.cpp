#include <iostream>
#include <string>
#include <vector>

#include "unisynt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return unisynt::run_cli(args, std::cout, std::cerr);
}
