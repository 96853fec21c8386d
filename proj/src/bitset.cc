#include <cliquecol/vertex_set.hh>

#include <algorithm>

using namespace cliquecol;

VertexSet::VertexSet(std::size_t capacity) :
    _capacity(capacity),
    _words(word_count(capacity), 0)
{
}

auto VertexSet::full(std::size_t capacity) -> VertexSet
{
    VertexSet result(capacity);
    std::fill(result._words.begin(), result._words.end(), ~std::uint64_t{0});
    if (capacity % 64 != 0)
        result._words.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
    return result;
}

auto VertexSet::of(std::size_t capacity, std::span<const int> members) -> VertexSet
{
    VertexSet result(capacity);
    for (int v : members)
        result.set(static_cast<std::size_t>(v));
    return result;
}

auto VertexSet::count() const -> std::size_t
{
    std::size_t total = 0;
    for (auto w : _words)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(_words.begin(), _words.end(), [] (auto w) { return w == 0; });
}

auto VertexSet::clear() -> void
{
    std::fill(_words.begin(), _words.end(), 0);
}

auto VertexSet::next(std::size_t from) const -> std::size_t
{
    if (from >= _capacity)
        return npos;
    std::size_t w = from >> 6;
    auto bits = _words[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits)
            return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == _words.size())
            return npos;
        bits = _words[w];
    }
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        if (_words[w] & other._words[w])
            return true;
    return false;
}

auto VertexSet::intersection_count(const VertexSet & other) const -> std::size_t
{
    std::size_t total = 0;
    for (std::size_t w = 0; w < _words.size(); ++w)
        total += static_cast<std::size_t>(std::popcount(_words[w] & other._words[w]));
    return total;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        if (_words[w] & ~other._words[w])
            return false;
    return true;
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        _words[w] &= other._words[w];
    return *this;
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        _words[w] |= other._words[w];
    return *this;
}

auto VertexSet::subtract(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        _words[w] &= ~other._words[w];
    return *this;
}

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(count());
    for_each([&] (int v) { result.push_back(v); });
    return result;
}

auto cliquecol::operator&(VertexSet a, const VertexSet & b) -> VertexSet
{
    a &= b;
    return a;
}
