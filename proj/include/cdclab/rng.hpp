// Deterministic random number utilities.
//
// Two flavors are provided:
//   - SplitMix64, a sequential generator used where a stream of draws is fine.
//   - counter_hash / counter_u01, stateless per-index draws keyed by
//     (seed, counter). Draw i never depends on draws j != i, so consumers can
//     be evaluated in any order or in parallel with identical results.
#pragma once

#include <cstdint>

namespace cdclab {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Finalizer from the splitmix64 generator; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless draw for index `i` under `seed`.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed + kGolden * (i + 1));
}

// Maps a 64-bit word to the unit interval [0, 1); 53 mantissa bits survive.
inline double to_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

// Uniform double in [0, 1) for index `i` under `seed`.
inline double counter_u01(std::uint64_t seed, std::uint64_t i) {
    return to_unit(counter_hash(seed, i));
}

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGolden;
        return mix64(state_);
    }

    double next_u01() { return to_unit(next()); }

    // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
    // bounds used here (bound << 2^64), but reject the worst stripe anyway.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t u;
        do {
            u = next();
        } while (u >= limit);
        return u % bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace cdclab
