#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <numbers>

namespace circlepack {

// One splitmix64 step: advances the state, returns the next output.
// Outputs of successive steps are distinct (the finalizer is a bijection
// applied to distinct states), which is what seed-batch generation relies on.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Seeded deterministic uniform source: xoshiro256++ with its four state
 * words filled from splitmix64(seed), the initialization recommended by
 * the generator's authors.
 *
 * The same seed yields the same sequence on every platform: state
 * transitions are pure 64-bit integer ops and doubles are built from the
 * top 53 bits, so every draw lies in [0, 1) and is exactly reproducible.
 */
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    [[nodiscard]] std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
    std::uint64_t seed_;
};

// Anything that can hand out uniforms in [0, 1). Tests substitute scripted
// sources to pin specific draws; production code always uses RngStream.
template <typename R>
concept UniformSource = requires(R r) {
    { r.next_double() } -> std::convertible_to<double>;
};

// Standard Cauchy deviate by inverse transform.
template <UniformSource R>
double standard_cauchy(R& rng) {
    return std::tan(std::numbers::pi * (rng.next_double() - 0.5));
}

}  // namespace circlepack
