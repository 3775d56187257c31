#include <iostream>

#include "hsc/cli.hpp"

int main(int argc, char** argv) {
  return hsc::cli::run(argc, argv, std::cout, std::cerr);
}
