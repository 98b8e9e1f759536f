#include <iostream>

#include "tcolor/cli.hpp"

int main(int argc, char** argv) {
  return tcolor::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
