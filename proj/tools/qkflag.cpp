#include <iostream>

#include "qkflag/cli.hpp"

int main(int argc, char** argv) {
  return qkflag::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
