#pragma once

#include <cstdint>

namespace longcycle {

// splitmix64 finalizer; also used as the published seed-mixing function.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Trial seed derivation: mix_seed(base, trial), mix_seed(base, trial, salt).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base ^ mix64(index));
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index, std::uint64_t salt) {
    return mix_seed(mix_seed(base, index), salt);
}

// Counter-based generator: output i is mix64(seed-dependent Weyl sequence).
// Cheap to seed, reproducible independent of call-site scheduling.
class counter_rng {
public:
    explicit counter_rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next_u64() {
        ++draws_;
        return mix64(state_ += 0x632be59bd9b4e019ULL);
    }

    // Uniform in [0,1); 53 random bits, so strictly below 1.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // next_u64 values consumed so far.
    std::uint64_t draws() const noexcept { return draws_; }

    // Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
    std::uint64_t draws_ = 0;
};

} // namespace longcycle
