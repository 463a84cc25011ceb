#include <cstdlib>
#include <iostream>

#include "abeta/cli.hpp"

int main(int argc, char** argv) {
  return abeta::cli::main_entry(argc, argv, std::cout, std::cerr, std::getenv("ABETA_THREADS"));
}
