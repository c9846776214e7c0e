#pragma once

#include <cstdint>

namespace cdlat {

// splitmix64: deterministic across platforms, unlike the distribution
// adapters in <random>.  Every randomized probe seeds one of these and
// records the seed in its report.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, n); modulo bias is irrelevant at the sizes
    // probed here and keeps the sequence platform-stable.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  private:
    std::uint64_t s_;
};

} // namespace cdlat
