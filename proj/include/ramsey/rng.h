#pragma once

#include <cmath>
#include <cstdint>

namespace ramsey {

// splitmix64 output mixer; used both as a seeding whitener and as the
// substream key derivation so streams are addressable by (seed, series, lane).
inline uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// xoshiro256** with counter-addressable construction. A stream is fully
// determined by (master_seed, series_index, lane); no stream ever depends on
// how many draws another stream made, so ensembles are reproducible for any
// worker count.
class RngStream {
  public:
    RngStream() : RngStream(0, 0, 0) {}

    RngStream(uint64_t master_seed, uint64_t series_index, uint64_t lane) {
        uint64_t key = master_seed;
        key ^= 0x9E3779B97F4A7C15ull * (series_index + 1);
        key ^= 0xC2B2AE3D27D4EB4Full * (lane + 0x51ull);
        uint64_t sm = key;
        for (auto& word : state_) {
            word = splitmix64_next(sm);
        }
        // xoshiro must not start in the all-zero state.
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
            state_[0] = 0x8000000000000001ull;
        }
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform on [0, 1), 53-bit resolution
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform on (0, 1]
    double uniform_pos() {
        return 1.0 - uniform();
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    double exponential(double rate) {
        return -std::log(uniform_pos()) / rate;
    }

    // One value per call (Box-Muller cosine branch; two uniforms consumed).
    // Keeps the stream stateless between calls, which the reproducibility
    // contract needs more than it needs the discarded sine branch.
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    uint64_t state_[4];
};

// Lane assignments used by the protocol layer. Lane 0 is the measurement
// stream; noise processes get their own lanes so the draw count of one
// process never shifts another.
namespace rng_lane {
inline constexpr uint64_t measurement = 0;
inline constexpr uint64_t gaussian = 1;
inline constexpr uint64_t tls_base = 2;  // TLS n uses lane tls_base + n
}  // namespace rng_lane

}  // namespace ramsey
