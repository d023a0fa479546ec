#pragma once

#include <cstdint>

namespace dmt {

// xorshift64* generator; self-contained so seeded runs are reproducible
// independent of the standard library implementation.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t x = state;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  bool coin() { return next() & 1; }
};

}  // namespace dmt
