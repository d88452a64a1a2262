#include <iostream>
#include <string>
#include <vector>

#include "tclass/commands.hpp"

int main(int argc, char** argv) {
  return tclass::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
