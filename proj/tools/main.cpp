#include <iostream>

#include "fraisse/cli.hpp"

int main(int argc, char** argv) {
  return fraisse::cli::run(argc, argv, std::cout, std::cerr);
}
