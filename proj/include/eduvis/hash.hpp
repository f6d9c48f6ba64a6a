#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eduvis {

// Hex-encoded SHA-256; the content-address used for cache keys, state
// identity prefixes, and stage input digests.
std::string sha256_hex(std::string_view data);

// splitmix64 stream; the deterministic RNG behind sampling and test
// generators (std::shuffle / distributions are not portable bit-for-bit).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) without modulo bias beyond 2^-64 scale effects;
    // bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

std::uint64_t fnv1a64(std::string_view data);

}  // namespace eduvis
