#include <iostream>

#include "omegalie/cli.hpp"

int main(int argc, char** argv) {
  return omegalie::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
