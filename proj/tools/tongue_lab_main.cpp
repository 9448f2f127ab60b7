#include <iostream>

#include "tongue_lab/cli.hpp"

int main(int argc, char** argv) {
  return tongue_lab::cli::run(argc, argv, std::cout, std::cerr);
}
