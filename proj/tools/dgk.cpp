#include <iostream>
#include <string>
#include <vector>

#include "digroup/cli.hpp"

int main(int argc, char** argv) {
  std::cout << std::unitbuf;
  std::vector<std::string> args(argv + 1, argv + argc);
  return digroup::run_cli(std::move(args), std::cout, std::cerr);
}
