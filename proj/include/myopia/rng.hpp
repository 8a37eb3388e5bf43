// Seeded PRNG for deterministic trial streams.
//
// splitmix64 (Sebastiano Vigna, public domain). One 64-bit state word,
// one scramble per output:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Doubles in [0, 1) are the top 53 bits scaled by 2^-53, so every draw
// is bit-identical across platforms. The same scramble also derives
// per-trial seeds, which is what makes serial and parallel protocol
// runs produce identical streams.
#pragma once

#include <cstdint>

namespace myopia {

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

private:
    uint64_t state_;
};

// Seed for stream `stream_index` under `base_seed`:
//   scramble(base_seed + 0x9E3779B97F4A7C15 * (stream_index + 1))
// with scramble = the splitmix64 output function above.
inline uint64_t mix_seed(uint64_t base_seed, uint64_t stream_index) {
    uint64_t z = base_seed + 0x9E3779B97F4A7C15ull * (stream_index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace myopia
