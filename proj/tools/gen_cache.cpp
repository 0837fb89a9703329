// Pregenerate a pbar cache file: gen_cache <n_max> <path>
#include <cstdlib>
#include <iostream>

#include "opbar/overpartition.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_cache <n_max> <path>\n";
    return 1;
  }
  char* end = nullptr;
  const long n = std::strtol(argv[1], &end, 10);
  if (end == argv[1] || *end != '\0' || n < 0) {
    std::cerr << "error: n_max must be a nonnegative integer\n";
    return 1;
  }
  try {
    opbar::PbarCache cache;
    cache.ensure(n);
    cache.save(argv[2]);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote pbar(0.." << n << ") to " << argv[2] << "\n";
  return 0;
}
