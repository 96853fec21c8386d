#ifndef CLIQUECOL_GUARD_VERTEX_SET_HH
#define CLIQUECOL_GUARD_VERTEX_SET_HH 1

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cliquecol
{
    /**
     * A fixed-capacity set of vertices 0..capacity-1, stored as packed 64-bit
     * words. Bits beyond the capacity are always zero, so popcounts and
     * comparisons never need masking.
     */
    class VertexSet
    {
        private:
            std::size_t _capacity = 0;
            std::vector<std::uint64_t> _words;

            static constexpr auto word_count(std::size_t n) -> std::size_t { return (n + 63) / 64; }

        public:
            static constexpr std::size_t npos = static_cast<std::size_t>(-1);

            VertexSet() = default;
            explicit VertexSet(std::size_t capacity);

            static auto full(std::size_t capacity) -> VertexSet;
            static auto of(std::size_t capacity, std::span<const int> members) -> VertexSet;

            auto capacity() const -> std::size_t { return _capacity; }
            auto words() const -> std::span<const std::uint64_t> { return _words; }

            auto set(std::size_t v) -> void { _words[v >> 6] |= std::uint64_t{1} << (v & 63); }
            auto reset(std::size_t v) -> void { _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
            auto test(std::size_t v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1; }

            auto count() const -> std::size_t;
            auto empty() const -> bool;
            auto clear() -> void;

            /// Lowest member at or after from, or npos.
            auto next(std::size_t from = 0) const -> std::size_t;

            auto intersects(const VertexSet & other) const -> bool;
            auto intersection_count(const VertexSet & other) const -> std::size_t;
            auto is_subset_of(const VertexSet & other) const -> bool;

            auto operator&=(const VertexSet & other) -> VertexSet &;
            auto operator|=(const VertexSet & other) -> VertexSet &;
            auto subtract(const VertexSet & other) -> VertexSet &;

            /// Members in increasing order.
            auto members() const -> std::vector<int>;

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (std::size_t w = 0; w < _words.size(); ++w) {
                    auto bits = _words[w];
                    while (bits) {
                        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
                        bits &= bits - 1;
                    }
                }
            }

            auto operator==(const VertexSet &) const -> bool = default;
    };

    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet;
}

#endif
