#pragma once

#include <cstdint>
#include <random>

namespace minids {

/// The one pseudo-random source used by every randomized routine.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The user seed is first passed through SplitMix64 so that
/// nearby seeds (0, 1, 2, ...) start from well-separated engine states.
/// Bounded integers use Lemire's multiply-shift rejection method and reals
/// take the top 53 bits, so results do not depend on the standard library's
/// distribution implementations and are identical across builds.
class Rng {
    __extension__ using Wide = unsigned __int128;

public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    static constexpr std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        Wide product = static_cast<Wide>(next()) * bound;
        auto low = static_cast<std::uint64_t>(product);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                product = static_cast<Wide>(next()) * bound;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

    /// Uniform real in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent child stream; children of the same parent seed with
    /// distinct stream ids do not overlap in practice.
    Rng split(std::uint64_t stream) const {
        return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace minids
