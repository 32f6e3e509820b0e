#include "binmosaic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return binmosaic::cli::run(argc, argv, std::cout, std::cerr);
}
