#pragma once

#include <cstdint>

namespace horoclif {

// Deterministic 64-bit splittable PRNG (splitmix64 core). All distributions
// are hand-rolled so output is byte-identical across platforms and standard
// library implementations.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next_u64();

  // Uniform in [0, 1).
  double next_double();

  double uniform(double lo, double hi);

  // Inclusive bounds.
  int uniform_int(int lo, int hi);

  // Standard normal via Box-Muller (one value per call, no cached spare).
  double normal();

  // Independent child stream; advances this stream once.
  Rng split();
};

}  // namespace horoclif
