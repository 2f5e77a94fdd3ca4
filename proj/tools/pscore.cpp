#include <iostream>

#include "pscore/cli.hpp"

int main(int argc, char** argv) {
  return pscore::cli::main_entry(argc, argv, std::cout, std::cerr);
}
