#include <iostream>

#include "degpow/cli/run.hpp"

int main(int argc, char** argv) {
  return degpow::cli::run_cli(argc, argv, std::cout, std::cerr);
}
