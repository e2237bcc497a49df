#include <iostream>

#include "dp6/cli.hpp"

int main(int argc, char** argv) {
  return dp6::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
