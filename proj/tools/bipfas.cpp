#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "bipfas/cli.hpp"

int main(int argc, char** argv) {
  const bipfas::cli::Options options{.color = std::getenv("NO_COLOR") == nullptr && isatty(2) != 0};
  return bipfas::cli::run({argv, argv + argc}, std::cout, std::cerr, options);
}
