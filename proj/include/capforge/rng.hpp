#ifndef CAPFORGE_RNG_HPP
#define CAPFORGE_RNG_HPP

#include <cstdint>

namespace capforge {

/// Deterministic 64-bit generator (xoshiro256++) seeded through a splitmix64
/// expansion of a master seed and a stream index.  Used everywhere a seeded
/// random choice is needed so that identical run configurations reproduce
/// byte-identical artifacts.
class rng {
public:
    explicit rng(std::uint64_t master_seed, std::uint64_t stream = 0) {
        std::uint64_t x = master_seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        for (auto& word : s_) word = splitmix64(x);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform value in [0, bound) by Lemire's multiply-shift rejection method.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace capforge

#endif  // CAPFORGE_RNG_HPP
