#include <iostream>
#include <string>
#include <vector>

#include "baryquad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return baryquad::run_cli(std::move(args), std::cout, std::cerr);
}
