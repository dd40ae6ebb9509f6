#include <iostream>
#include <string>
#include <vector>

#include "rlcband/cli.hpp"

int main(int argc, char** argv) {
  return rlcband::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
