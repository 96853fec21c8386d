#include <cliquecol/rng.hh>

#include <numeric>
#include <utility>

namespace cliquecol
{
    auto mix64(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    auto keyed_hash(std::uint64_t key, std::initializer_list<std::uint64_t> words) -> std::uint64_t
    {
        std::uint64_t h = mix64(key ^ 0x6a09e667f3bcc908ULL);
        for (auto w : words)
            h = mix64(h ^ mix64(w + 0x3c6ef372fe94f82bULL));
        return h;
    }

    auto unit_interval(std::uint64_t h) -> double
    {
        return static_cast<double>(h >> 11) * 0x1.0p-53;
    }

    auto bounded(std::uint64_t h, std::uint64_t bound) -> std::uint64_t
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * bound) >> 64);
    }

    auto seeded_permutation(int n, std::uint64_t seed) -> std::vector<int>
    {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        for (int i = n - 1; i > 0; --i) {
            auto j = bounded(keyed_hash(seed, {0x5045524dULL, static_cast<std::uint64_t>(i)}),
                static_cast<std::uint64_t>(i) + 1);
            std::swap(order[static_cast<std::size_t>(i)], order[j]);
        }
        return order;
    }

    auto vertex_order(int n, std::optional<std::uint64_t> seed) -> std::vector<int>
    {
        if (seed)
            return seeded_permutation(n, *seed);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        return order;
    }
}
