#include "moireq/cli.hpp"
#include "moireq/constants.hpp"

#include <cstdio>

int main(int argc, char** argv) {
  if (!moireq::constants_consistent()) {
    std::fprintf(stderr, "internal error: physical constants are inconsistent\n");
    return 2;
  }
  return moireq::run_cli(argc, argv);
}
