#pragma once

#include <cstdint>
#include <string_view>

namespace hyperterrain {

// splitmix64 (Steele/Lea/Vigna). All seeded corpora and sampling loops run on
// this generator so results reproduce bit-for-bit across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Modulo draw; the bias is irrelevant here, determinism is what matters.
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a);
    SplitMix64 h(g.next() ^ b);
    return h.next();
}

// FNV-1a, used to derive per-check PRNG streams from check ids.
inline std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace hyperterrain
