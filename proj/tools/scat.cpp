#include <iostream>
#include <string>
#include <vector>

#include "scat/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scat::run_cli(args, std::cout, std::cerr);
}
