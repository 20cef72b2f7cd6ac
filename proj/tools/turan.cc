#include <iostream>
#include <string>
#include <vector>

#include "turan/cli.hh"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return turan::run_cli(args, std::cin, std::cout, std::cerr);
}
