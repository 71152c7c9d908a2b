#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "support.hpp"

#include <cstdlib>
#include <iostream>

std::uint64_t test_seed() {
  static const std::uint64_t seed = [] {
    const char* s = std::getenv("KLEINHOMOLOGY_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 20240601ull;
  }();
  return seed;
}

int main(int argc, char** argv) {
  std::cout << "randomized tests use seed " << test_seed() << " (KLEINHOMOLOGY_SEED)\n";
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
