#include "ulab/subp/primes.hpp"

#include "ulab/error.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace ulab::subp {
namespace {

// Shared sieve, grown on demand.
class Sieve {
 public:
  std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::lock_guard lock(mutex_);
    if (limit > bound_) grow(std::max(limit, bound_ * 2));
    return primes_;
  }

  std::uint64_t nth(std::uint64_t i) {
    std::lock_guard lock(mutex_);
    while (primes_.size() < i) grow(bound_ * 2);
    return primes_[i - 1];
  }

 private:
  void grow(std::uint64_t bound) {
    std::vector<bool> composite(bound + 1, false);
    primes_.clear();
    for (std::uint64_t n = 2; n <= bound; ++n) {
      if (composite[n]) continue;
      primes_.push_back(n);
      for (std::uint64_t m = n * n; m <= bound; m += n) composite[m] = true;
    }
    bound_ = bound;
  }

  std::mutex mutex_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t bound_ = 1;
};

Sieve& sieve() {
  static Sieve s;
  return s;
}

}  // namespace

std::uint64_t nth_prime(std::uint64_t i) {
  if (i == 0) fail(Errc::InvalidArgument, "primes are indexed from 1");
  return sieve().nth(i);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t prime_count(std::uint64_t n) {
  const auto primes = sieve().primes_up_to(n);
  return static_cast<std::uint64_t>(std::upper_bound(primes.begin(), primes.end(), n) - primes.begin());
}

Factorization factorize(BigInt n, std::uint64_t limit) {
  if (n < 1) fail(Errc::InvalidArgument, "only positive integers factor");
  Factorization out;
  for (std::uint64_t p : sieve().primes_up_to(limit)) {
    if (p > limit || n == 1) break;
    BigInt exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    if (exponent > 0) out.factors[BigInt(p)] = exponent;
  }
  out.remainder = n;
  return out;
}

}  // namespace ulab::subp
