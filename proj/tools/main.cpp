#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return copula_transport::cli::run(argc, argv, std::cout, std::cerr);
}
