#pragma once

#include <cstdint>

namespace drsrd {

// SplitMix64. Chosen for portability: identical sequences on every platform,
// no library distribution involved anywhere in the pipeline.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, n): the high 64 bits of next() * n (multiply-shift;
    // bias is below 2^-57 for our bound sizes and the mapping is fixed, which
    // is what reproducibility needs).
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

// Independent streams are derived by XORing the experiment seed with a fixed
// per-purpose tag, so the value/masking/query sequences never interleave.
inline constexpr std::uint64_t kValueStreamTag = 0xD1B54A32D192ED03ULL;
inline constexpr std::uint64_t kMaskStreamTag = 0x8CB92BA72F3D8DD7ULL;
inline constexpr std::uint64_t kQueryStreamTag = 0x2545F4914F6CDD1DULL;

inline SplitMix64 seeded_stream(std::uint64_t seed, std::uint64_t tag) {
    return SplitMix64(seed ^ tag);
}

}  // namespace drsrd
