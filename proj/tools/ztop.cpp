#include <iostream>

#include "ztop/cli.hpp"

int main(int argc, char** argv) {
  return ztop::cli::run(argc, argv, std::cout, std::cerr);
}
