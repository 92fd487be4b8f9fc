#include <iostream>
#include <string>
#include <vector>

#include "legfill/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return legfill::run(std::move(args), std::cout, std::cerr);
}
