#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace antimagic {

// xorshift64* seeded through one splitmix64 scramble. This exact generator is
// part of the reproducibility contract: a given seed yields the same draw
// sequence on every platform, so generated instances are portable test
// fixtures rather than one-off randomness.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(uint64_t seed) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    state_ = z != 0 ? z : 0x2545f4914f6cdd1dULL;  // state must stay nonzero
  }

  uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
  }

  // Uniform-ish draw in [0, bound); bound > 0. Plain modulo: the tiny bias is
  // irrelevant here and the result is trivially portable.
  uint64_t next_below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t state_;
};

template <typename T>
void fisher_yates_shuffle(std::vector<T>& values, Xorshift64Star& rng) {
  for (size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[rng.next_below(i)]);
  }
}

}  // namespace antimagic
