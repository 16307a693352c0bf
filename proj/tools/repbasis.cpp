#include <iostream>
#include <string>
#include <vector>

#include "repbasis/cli.hpp"

int main(int argc, char** argv) {
  return repbasis::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
