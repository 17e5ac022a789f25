#include <iostream>
#include <string>
#include <vector>

#include "rxi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rxi::run(args, std::cout, std::cerr);
}
