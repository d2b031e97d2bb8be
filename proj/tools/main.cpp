#include <iostream>

#include "hrds/cli.hpp"

int main(int argc, char** argv) {
  return hrds::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
