#include <iostream>
#include <string>
#include <vector>

#include "fppctl.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fppctl::run(args, std::cout, std::cerr);
}
