#include <cstdlib>
#include <iostream>

#include "dtqft/tools/cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> field;
  if (const char* env = std::getenv("DTQFT_FIELD")) field = env;
  std::vector<std::string> args(argv + 1, argv + argc);
  return dtqft::tools::run_cli(args, std::cout, std::cerr, field);
}
