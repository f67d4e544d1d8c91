#include <iostream>

#include "groupgraph/cli.hpp"

int main(int argc, char** argv) {
  return groupgraph::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
