#include <iostream>

#include "zdr/cli.hpp"

int main(int argc, char** argv) {
  return zdr::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
