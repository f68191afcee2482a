#pragma once

#include "ulab/hyper/scalar.hpp"

#include <cstdint>
#include <map>

namespace ulab::subp {

using hyper::BigInt;

/// The i-th prime, 1-based: nth_prime(1) == 2.
std::uint64_t nth_prime(std::uint64_t i);
bool is_prime(std::uint64_t n);
/// Number of primes <= n.
std::uint64_t prime_count(std::uint64_t n);

struct Factorization {
  std::map<BigInt, BigInt> factors;  ///< prime -> exponent
  BigInt remainder = 1;              ///< unfactored cofactor (1 when complete)
};

/// Trial division by the primes up to `limit`.
Factorization factorize(BigInt n, std::uint64_t limit);

}  // namespace ulab::subp
