#include <iostream>

#include "rootchi_tools/commands.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return rootchi::tools::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
