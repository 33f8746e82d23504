#pragma once

#include <cstdint>
#include <string_view>

namespace wsn {

// Deterministic random stream. One stream per concern (placement, MAC
// jitter, loss) so that adding traffic to one consumer of randomness does
// not perturb the others. splitmix64 core: identical output on every
// platform for a given (seed, label).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label);

  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::uint64_t state_;
};

}  // namespace wsn
