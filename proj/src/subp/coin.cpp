#include "ulab/subp/coin.hpp"

#include "ulab/error.hpp"

#include <cmath>

namespace ulab::subp {

std::string coin_sequence(const hyper::Rational& x, std::size_t count) {
  if (!(x > 0 && x < 1)) fail(Errc::OutOfUnitInterval, "coin seed must lie in (0, 1)");
  if (count < 1) fail(Errc::InvalidArgument, "count must be >= 1");
  const hyper::Rational half(1, 2);
  std::string out;
  out.reserve(count);
  hyper::Rational frac = x;
  for (std::size_t k = 0; k < count; ++k) {
    frac *= 2;
    if (frac >= 1) frac -= 1;
    out.push_back(frac < half ? 'H' : 'T');
  }
  return out;
}

CoinStatistics coin_statistics(const std::string& flips) {
  CoinStatistics s;
  s.flips = flips.size();
  if (flips.empty()) return s;
  for (std::size_t k = 0; k < flips.size(); ++k) {
    if (flips[k] == 'H') ++s.heads;
    if (k == 0 || flips[k] != flips[k - 1]) ++s.runs;
  }
  const double n = static_cast<double>(s.flips);
  const double h = static_cast<double>(s.heads);
  const double t = n - h;
  s.head_fraction = h / n;
  s.frequency_ok = std::abs(s.head_fraction - 0.5) < 0.02;
  const double mean = 2 * h * t / n + 1;
  const double variance = 2 * h * t * (2 * h * t - n) / (n * n * (n - 1));
  if (variance > 0) {
    s.runs_z = (static_cast<double>(s.runs) - mean) / std::sqrt(variance);
    s.runs_ok = std::abs(s.runs_z) < 2.576;
  }
  return s;
}

}  // namespace ulab::subp
