#include <iostream>

#include "detproc_cli/cli.hpp"

int main(int argc, char** argv) {
  return detproc::cli::main_entry(argc, argv, std::cout, std::cerr);
}
