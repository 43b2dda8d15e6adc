#pragma once

#include <cstdint>
#include <random>

// Seeded, platform-stable random streams.  std::mt19937_64 output is
// specified by the standard; the uniform mappings below avoid the
// implementation-defined std::*_distribution classes so that identical
// seeds give identical samples everywhere.

namespace trace_sharp::rng {

class Stream {
  public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // in [0, 1)
        return double(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + int(uniform() * double(hi - lo + 1));
    }

  private:
    std::mt19937_64 engine_;
};

// SplitMix64 step; decorrelates per-item substream seeds derived from a
// shared base seed.
inline std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Stream substream(std::uint64_t seed, std::uint64_t index) {
    return Stream(mix(seed + 0x632be59bd9b4e019ULL * (index + 1)));
}

}  // namespace trace_sharp::rng
