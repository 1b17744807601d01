#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace sentiment {

/// SplitMix64 generator. Every seeded decision in the library (split
/// shuffles, SVM sample order) draws from this so that results are
/// reproducible across platforms and across reimplementations.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound) by rejection: draws r until
    /// r < 2^64 - (2^64 mod bound), then returns r mod bound.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        const std::uint64_t reject_from = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
        std::uint64_t r = next();
        while (r > reject_from) r = next();
        return r % bound;
    }

private:
    std::uint64_t state_;
};

/// Fisher-Yates shuffle from the back: for i = n-1 down to 1, swap
/// items[i] with items[below(i + 1)].
template <typename T>
void shuffle(std::span<T> items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

}  // namespace sentiment
