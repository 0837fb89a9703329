// Exact overpartition numbers pbar(n) with a dense, growable cache.
// Computed as the convolution of partitions-into-distinct-parts with
// ordinary partitions, each from its own classical recurrence; the two
// sub-sequences give a built-in cross-check against independent oracles.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace opbar {

class PbarCache {
 public:
  PbarCache();

  // extends the cache so indices 0..n are present
  void ensure(long n);
  // exact pbar(n); extends as needed. n < 0 is a domain error.
  const mpz_class& at(long n);
  // exact values for n = lo..hi inclusive
  std::vector<mpz_class> range(long lo, long hi);
  long n_max() const { return static_cast<long>(pbar_.size()) - 1; }

  // cache file format: "OPBAR-CACHE v1" / "count=<m>" / m decimal lines, LF
  void save(const std::string& path) const;
  static PbarCache load(const std::string& path);

 private:
  std::vector<mpz_class> part_;      // ordinary partitions p(n)
  std::vector<mpz_class> distinct_;  // partitions into distinct parts
  std::vector<mpz_class> pbar_;
};

}  // namespace opbar
