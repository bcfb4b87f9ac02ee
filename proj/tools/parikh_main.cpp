#include <iostream>

#include "parikh/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return parikh::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
