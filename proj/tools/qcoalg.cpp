#include <iostream>
#include <string>
#include <vector>

#include "qcoalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcoalg::run(args, std::cout, std::cerr);
}
