#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qsched {

// All randomness in the library flows from one top-level seed. Sub-streams
// are derived by hashing the parent seed together with a stream name and an
// optional index, so adding a new consumer never perturbs existing streams.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view name,
                                 std::uint64_t index = 0) {
    std::uint64_t h = base;
    for (char c : name) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    return splitmix64(h ^ splitmix64(index));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline std::mt19937_64 make_rng(std::uint64_t base, std::string_view name,
                                std::uint64_t index = 0) {
    return std::mt19937_64(derive_seed(base, name, index));
}

}  // namespace qsched
