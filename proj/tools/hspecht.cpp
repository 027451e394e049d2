#include <iostream>

#include "hspecht/cli.hpp"

int main(int argc, char** argv) {
  return hspecht::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
