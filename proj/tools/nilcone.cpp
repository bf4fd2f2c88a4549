#include <iostream>
#include <string>
#include <vector>

#include "nilcone/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilcone::run(args, std::cout, std::cerr);
}
