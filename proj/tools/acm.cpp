#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "acm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = isatty(STDOUT_FILENO) != 0 && std::getenv("ACM_NO_COLOR") == nullptr;
  return acm::run_cli(args, std::cout, std::cerr, color);
}
