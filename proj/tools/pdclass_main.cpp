#include <iostream>

#include "pdclass/cli.hpp"

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  return pdclass::run_cli(argc, argv, std::cout, std::cerr);
}
