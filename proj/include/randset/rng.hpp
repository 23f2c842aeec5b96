#pragma once

#include <array>
#include <cstdint>

namespace randset {

// Seed contract for every sampler: (master_seed, stream_index) -> generator
// state is a fixed pure function, identical on every platform. Callers
// parallelize by varying stream_index.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

namespace detail {
// SplitMix64 output function (Vigna). Used for seeding only.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace detail

// xoshiro256** with SplitMix64 stream derivation.
//
// State setup is fixed by contract:
//   s0 = master_seed
//   s0 = splitmix64(s0)                      (one mixing round)
//   s0 ^= stream_index + 0x9E3779B97F4A7C15  (stream offset)
//   state[i] = four successive SplitMix64 outputs from s0
//
// All derived quantities (next_u64, below, next_double) are pure functions
// of the state, so identical SeedSpec gives identical draws everywhere.
class Rng {
public:
    explicit Rng(SeedSpec spec) {
        std::uint64_t h = spec.master_seed;
        (void)detail::splitmix64_next(h);
        h ^= spec.stream_index + 0x9E3779B97F4A7C15ULL;
        for (auto& s : state_) s = detail::splitmix64_next(h);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased integer in [0, n) by rejection below 2^64 mod n.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // 53-bit mantissa uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace randset
