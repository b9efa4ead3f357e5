#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = k3lat::cli::run(args);
  std::cout << r.output;
  std::cerr << r.errors;
  return r.exit_code;
}
