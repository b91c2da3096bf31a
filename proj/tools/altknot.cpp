#include <iostream>
#include <string>
#include <vector>

#include "altknot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return altknot::run_cli(args, std::cout, std::cerr);
}
