#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace arrfactor {

/// Dynamically sized set of hyperplane indices.
///
/// Flats are identified by their support, so this type is the hash key of the
/// whole lattice. Bits past size() are always zero.
class BitSet {
public:
    BitSet() = default;
    explicit BitSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static BitSet from_indices(std::size_t size, const std::vector<std::size_t>& indices)
    {
        BitSet s(size);
        for (auto i : indices) {
            s.set(i);
        }
        return s;
    }

    static BitSet full(std::size_t size)
    {
        BitSet s(size);
        for (std::size_t i = 0; i < size; ++i) {
            s.set(i);
        }
        return s;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set(std::size_t i)
    {
        if (i >= size_) {
            throw std::out_of_range("BitSet::set: index out of range");
        }
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    bool empty() const
    {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    bool is_subset_of(const BitSet& other) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & ~other.words_[k]) != 0) {
                return false;
            }
        }
        return true;
    }

    bool intersects(const BitSet& other) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & other.words_[k]) != 0) {
                return true;
            }
        }
        return false;
    }

    BitSet& operator|=(const BitSet& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] |= o.words_[k];
        }
        return *this;
    }

    BitSet& operator&=(const BitSet& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] &= o.words_[k];
        }
        return *this;
    }

    BitSet& operator-=(const BitSet& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] &= ~o.words_[k];
        }
        return *this;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    friend bool operator==(const BitSet& a, const BitSet& b) = default;

    /// Members in increasing order.
    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w != 0) {
                out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Smallest member, or size() if empty.
    std::size_t first() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) {
                return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
            }
        }
        return size_;
    }

    std::size_t hash() const
    {
        std::uint64_t h = 1469598103934665603ULL ^ size_;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitSetHash {
    std::size_t operator()(const BitSet& s) const { return s.hash(); }
};

} // namespace arrfactor
