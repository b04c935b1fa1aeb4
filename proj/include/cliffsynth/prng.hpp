#pragma once

#include <cstdint>
#include <random>

namespace cliffsynth {

// Deterministic random source. std::mt19937_64 has a portable, fully
// specified output sequence; the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined,
// so identical seeds give identical streams on every platform.
class Prng {
public:
  explicit Prng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform draw from [0, bound) via rejection on the top multiple of bound.
  uint64_t next_below(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  bool next_bool() { return (eng_() >> 63) != 0; }

private:
  std::mt19937_64 eng_;
};

}  // namespace cliffsynth
