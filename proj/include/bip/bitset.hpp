#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bip {

/// Fixed-size bitset sized at runtime; used for up/down sets of finite posets.
class Bitset
{
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i / 64] |= 1ULL << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(1ULL << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1ULL; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    std::size_t find_first() const { return find_next_from(0); }
    /// First set index >= from.
    std::size_t find_next_from(std::size_t from) const
    {
        if (from >= size_)
            return npos;
        std::size_t wi = from / 64;
        std::uint64_t w = words_[wi] & (~0ULL << (from % 64));
        while (true) {
            if (w)
                return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }
    std::size_t find_last() const
    {
        for (std::size_t wi = words_.size(); wi-- > 0;)
            if (words_[wi])
                return wi * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[wi]));
        return npos;
    }

    bool is_subset_of(const Bitset& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    bool operator==(const Bitset&) const = default;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            auto w = words_[wi];
            while (w) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace bip
