#include "opbar/overpartition.hpp"

#include <fstream>
#include <stdexcept>

namespace opbar {

namespace {
// coefficient of x^n in prod_k (1 - x^{2k}): (-1)^m at n = m(3m-+1), else 0
int distinct_rhs(long n) {
  for (long m = 1; m * (3 * m - 1) <= n; ++m) {
    if (m * (3 * m - 1) == n || m * (3 * m + 1) == n)
      return (m % 2 == 1) ? -1 : 1;
  }
  return 0;
}

// shared shape of the pentagonal-number recurrences
template <class Rhs>
void grow_pentagonal(std::vector<mpz_class>& seq, long n, Rhs rhs) {
  for (long m = static_cast<long>(seq.size()); m <= n; ++m) {
    mpz_class v = rhs(m);
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const long g2 = j * (3 * j + 1) / 2;
      if (j % 2 == 1) {
        v += seq[m - g1];
        if (g2 <= m) v += seq[m - g2];
      } else {
        v -= seq[m - g1];
        if (g2 <= m) v -= seq[m - g2];
      }
    }
    seq.push_back(std::move(v));
  }
}
}  // namespace

PbarCache::PbarCache() {
  part_.emplace_back(1);
  distinct_.emplace_back(1);
  pbar_.emplace_back(1);
}

void PbarCache::ensure(long n) {
  if (n < 0) throw std::domain_error("overpartition: negative index");
  if (n < static_cast<long>(pbar_.size())) return;

  // helper sequences are independent of pbar_ and may lag behind after a
  // cache load; bring them up to n first
  const bool helpers_were_stale =
      part_.size() < pbar_.size() && pbar_.size() > 1;
  grow_pentagonal(part_, n, [](long) { return 0; });
  grow_pentagonal(distinct_, n, distinct_rhs);

  auto convolve = [this](long m) {
    mpz_class v = 0;
    for (long k = 0; k <= m; ++k)
      mpz_addmul(v.get_mpz_t(), distinct_[k].get_mpz_t(),
                 part_[m - k].get_mpz_t());
    return v;
  };

  if (helpers_were_stale) {
    // seam check: loaded values must agree with the recurrences where they meet
    const long last = static_cast<long>(pbar_.size()) - 1;
    if (convolve(last) != pbar_[last])
      throw std::runtime_error(
          "cache consistency error: loaded values fail the recurrence");
  }
  for (long m = static_cast<long>(pbar_.size()); m <= n; ++m)
    pbar_.push_back(convolve(m));
}

const mpz_class& PbarCache::at(long n) {
  if (n < 0) throw std::domain_error("overpartition: negative index");
  ensure(n);
  return pbar_[n];
}

std::vector<mpz_class> PbarCache::range(long lo, long hi) {
  if (lo < 0 || lo > hi) throw std::domain_error("overpartition: bad range");
  ensure(hi);
  return std::vector<mpz_class>(pbar_.begin() + lo, pbar_.begin() + hi + 1);
}

void PbarCache::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open cache file for write: " + path);
  out << "OPBAR-CACHE v1\n" << "count=" << pbar_.size() << "\n";
  for (const auto& v : pbar_) out << v.get_str() << "\n";
  out.flush();
  if (!out) throw std::runtime_error("cache write failed: " + path);
}

PbarCache PbarCache::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "OPBAR-CACHE v1")
    throw std::runtime_error("cache format error: bad magic");
  if (!std::getline(in, line) || line.rfind("count=", 0) != 0)
    throw std::runtime_error("cache format error: missing count");
  const std::string num = line.substr(6);
  if (num.empty() || num.size() > 9 ||
      num.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error("cache format error: bad count");
  const long count = std::stol(num);
  if (count == 0) throw std::runtime_error("cache format error: empty cache");

  PbarCache c;
  c.pbar_.clear();
  c.pbar_.reserve(count);
  for (long i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("cache format error: count exceeds lines");
    if (line.empty() ||
        line.find_first_not_of("0123456789") != std::string::npos)
      throw std::runtime_error("cache format error: non-decimal value line");
    c.pbar_.emplace_back(line, 10);
  }
  if (std::getline(in, line))
    throw std::runtime_error("cache format error: trailing data");

  // cheap integrity checks; a full recurrence check happens at the seam
  // if the cache is ever grown
  static const long head[] = {1, 2, 4, 8, 14, 24, 40,
                              64, 100, 154, 232, 344, 504};
  for (long i = 0; i < count && i < 13; ++i)
    if (c.pbar_[i] != head[i])
      throw std::runtime_error("cache format error: head mismatch");
  for (long i = 1; i < count; ++i)
    if (c.pbar_[i] <= c.pbar_[i - 1])
      throw std::runtime_error("cache format error: not strictly increasing");
  return c;
}

}  // namespace opbar
