#include <iostream>

#include "qtcat/cli.hpp"

int main(int argc, char** argv) {
  return qtcat::cli::run(argc, argv, std::cout, std::cerr);
}
