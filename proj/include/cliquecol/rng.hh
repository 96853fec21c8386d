#ifndef CLIQUECOL_GUARD_RNG_HH
#define CLIQUECOL_GUARD_RNG_HH 1

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace cliquecol
{
    /// SplitMix64 finaliser: a bijective 64-bit mixer.
    auto mix64(std::uint64_t x) -> std::uint64_t;

    /// Counter-based keyed hash. The result depends only on the key and the
    /// sequence of words, so any value can be recomputed in isolation.
    auto keyed_hash(std::uint64_t key, std::initializer_list<std::uint64_t> words) -> std::uint64_t;

    /// Top 53 bits of a hash as a double in [0, 1).
    auto unit_interval(std::uint64_t h) -> double;

    /// Uniform-ish integer in [0, bound) by multiply-shift; bias is below 2^-32 for bound < 2^32.
    auto bounded(std::uint64_t h, std::uint64_t bound) -> std::uint64_t;

    /// Fisher-Yates permutation of 0..n-1 driven by keyed_hash(seed, step).
    auto seeded_permutation(int n, std::uint64_t seed) -> std::vector<int>;

    /// Natural order 0..n-1 when seed is empty, otherwise seeded_permutation.
    auto vertex_order(int n, std::optional<std::uint64_t> seed) -> std::vector<int>;
}

#endif
