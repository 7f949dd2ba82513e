#include <iostream>
#include <string>
#include <vector>

#include "pvf/cli/app.hpp"

int main(int argc, char** argv) {
  return pvf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
