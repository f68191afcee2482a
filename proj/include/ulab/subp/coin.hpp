#pragma once

#include "ulab/hyper/scalar.hpp"

#include <string>
#include <vector>

namespace ulab::subp {

/// Entry k (k = 1..count) is 'H' when frac(x * 2^k) < 1/2, else 'T'.
/// Throws OutOfUnitInterval unless 0 < x < 1, InvalidArgument for count < 1.
std::string coin_sequence(const hyper::Rational& x, std::size_t count);

struct CoinStatistics {
  std::size_t flips = 0;
  std::size_t heads = 0;
  std::size_t runs = 0;
  double head_fraction = 0;
  double runs_z = 0;  ///< Wald-Wolfowitz statistic
  bool frequency_ok = false;  ///< |heads/n - 1/2| < 0.02
  bool runs_ok = false;       ///< |z| < 2.576 (two-sided 1%)
};

CoinStatistics coin_statistics(const std::string& flips);

}  // namespace ulab::subp
