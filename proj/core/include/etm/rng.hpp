#pragma once

#include <cstdint>
#include <string_view>

namespace etm {

// xoshiro256++ with splitmix64 seeding. Pure integer arithmetic, so
// identical sequences on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform double in [0, 1), 53 mantissa bits.
  double uniform();

  // Uniform integer in [0, n), unbiased (rejection sampling). n must be > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t s_[4];
};

// Sub-seed derivation: mixes a master seed, a component name, and an index
// into an independent stream seed. Every stochastic component draws its seed
// through this so that one master seed pins the whole run.
//
//   sub = mix(master ^ fnv1a64(component), index)
std::uint64_t derive_seed(std::uint64_t master, std::string_view component,
                          std::uint64_t index);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace etm
