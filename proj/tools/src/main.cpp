#include <iostream>
#include <string>
#include <vector>

#include "fanokit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fanokit::cli::run(args, std::cout, std::cerr, std::cin);
}
