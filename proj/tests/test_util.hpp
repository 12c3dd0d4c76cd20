#pragma once

#include <cstdlib>
#include <random>

// Deterministic RNG for property sweeps; VORTEXLAB_SEED overrides the seed.
inline std::mt19937_64 test_rng() {
  const char* env = std::getenv("VORTEXLAB_SEED");
  const unsigned long long seed = env ? std::strtoull(env, nullptr, 10) : 0x5eed5eedull;
  return std::mt19937_64(seed);
}
