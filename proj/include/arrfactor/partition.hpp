#pragma once

#include "arrfactor/bitset.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrfactor {

/// Partition of the hyperplane indices 0..n-1 into nonempty, ordered blocks.
class Partition {
public:
    Partition() = default;

    Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks) : n_(n), blocks_(std::move(blocks))
    {
        block_of_.assign(n_, npos);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            auto& blk = blocks_[b];
            if (blk.empty()) {
                throw std::invalid_argument("Partition: block " + std::to_string(b) + " is empty");
            }
            std::sort(blk.begin(), blk.end());
            for (auto h : blk) {
                if (h >= n_) {
                    throw std::invalid_argument("Partition: index " + std::to_string(h) + " out of range");
                }
                if (block_of_[h] != npos) {
                    throw std::invalid_argument("Partition: index " + std::to_string(h) + " in two blocks");
                }
                block_of_[h] = b;
            }
        }
        for (std::size_t h = 0; h < n_; ++h) {
            if (block_of_[h] == npos) {
                throw std::invalid_argument("Partition: index " + std::to_string(h) + " in no block");
            }
        }
    }

    /// From block labels 0..s-1, every label used.
    static Partition from_labels(const std::vector<std::size_t>& labels)
    {
        std::size_t s = 0;
        for (auto l : labels) {
            s = std::max(s, l + 1);
        }
        std::vector<std::vector<std::size_t>> blocks(s);
        for (std::size_t h = 0; h < labels.size(); ++h) {
            blocks[labels[h]].push_back(h);
        }
        return Partition(labels.size(), std::move(blocks));
    }

    std::size_t size() const { return n_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
    std::size_t block_of(std::size_t h) const { return block_of_.at(h); }

    BitSet block_set(std::size_t b) const { return BitSet::from_indices(n_, blocks_.at(b)); }

    std::vector<std::size_t> block_sizes() const
    {
        std::vector<std::size_t> out;
        for (const auto& b : blocks_) {
            out.push_back(b.size());
        }
        return out;
    }

    /// Same blocks with block b moved to the front, others in order.
    Partition with_first(std::size_t b) const
    {
        std::vector<std::vector<std::size_t>> blocks{blocks_.at(b)};
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i != b) {
                blocks.push_back(blocks_[i]);
            }
        }
        return Partition(n_, std::move(blocks));
    }

    friend bool operator==(const Partition& a, const Partition& b)
    {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            s += b == 0 ? "{" : ", {";
            for (std::size_t k = 0; k < blocks_[b].size(); ++k) {
                s += (k == 0 ? "" : ",") + std::to_string(blocks_[b][k]);
            }
            s += "}";
        }
        return s + ")";
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

} // namespace arrfactor
