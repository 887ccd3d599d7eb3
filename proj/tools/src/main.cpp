#include <iostream>

#include "cylindric/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return cylindric::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
