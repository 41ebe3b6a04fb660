#include <iostream>

#include "cohomc/cli.hpp"

int main(int argc, char** argv) {
  return cohomc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
