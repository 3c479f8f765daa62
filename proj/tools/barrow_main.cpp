#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "barrow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return barrow::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return barrow::cli::kExitDomain;
  }
}
