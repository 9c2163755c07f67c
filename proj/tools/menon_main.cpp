#include <iostream>

#include "menon/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return menon::cli::run(argc, argv, std::cout, std::cerr);
}
