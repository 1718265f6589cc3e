#pragma once

#include <cstdint>
#include <random>

namespace deltared {

/// Reproducible random source.
///
/// The engine is std::mt19937_64 seeded with a single 64-bit value through
/// its standard `seed(value)` initialisation, so any conforming
/// implementation yields the same stream. Doubles are formed from the top 53
/// bits of one engine output; the standard distributions are avoided because
/// their algorithms are implementation-defined.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    /// Independent stream for (seed, index): engine seeded with
    /// splitmix64(seed ^ splitmix64(index)).
    static auto substream(std::uint64_t seed, std::uint64_t index) -> Rng
    {
        return Rng(splitmix64(seed ^ splitmix64(index)));
    }

    /// Uniform on [0, 1).
    auto uniform01() -> double
    {
        return static_cast<double>(_engine() >> 11) * 0x1.0p-53;
    }

    auto next_u64() -> std::uint64_t { return _engine(); }

    /// Uniform on [0, bound) by rejection; bound must be positive.
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do
            r = _engine();
        while (r >= limit);
        return r % bound;
    }

    static constexpr auto splitmix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 _engine;
};

}
