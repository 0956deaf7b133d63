#pragma once

#include "arrfactor/nice.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrfactor {

/// X is modular iff X + Y is a flat for every flat Y. Since the meet X ^ Y is
/// the smallest flat containing X + Y and dim(X + Y) = dim X + dim Y -
/// dim(X v Y), this is the rank identity r(X^Y) + r(XvY) = r(X) + r(Y).
inline bool is_modular(const IntersectionLattice& lat, FlatId x)
{
    const std::size_t rx = lat.flat(x).rank;
    for (FlatId y = 0; y < lat.size(); ++y) {
        const std::size_t ry = lat.flat(y).rank;
        const std::size_t rmeet = lat.flat(lat.meet(x, y)).rank;
        const std::size_t rjoin = lat.flat(lat.join(x, y)).rank;
        if (rmeet + rjoin != rx + ry) {
            return false;
        }
    }
    return true;
}

/// A maximal chain V = X_0 < X_1 < ... < X_r of modular flats, found by
/// depth-first search over covers; nullopt if there is none.
inline std::optional<std::vector<FlatId>> modular_chain(const IntersectionLattice& lat)
{
    std::vector<signed char> modular(lat.size(), -1);
    auto is_mod = [&](FlatId x) {
        if (modular[x] < 0) {
            modular[x] = is_modular(lat, x) ? 1 : 0;
        }
        return modular[x] == 1;
    };
    std::vector<FlatId> chain{lat.bottom()};
    std::vector<char> dead(lat.size(), 0);
    std::function<bool(FlatId)> climb = [&](FlatId cur) {
        if (lat.flat(cur).rank == lat.rank()) {
            return true;
        }
        for (auto y : lat.covers(cur)) {
            if (dead[y] || !is_mod(y)) {
                continue;
            }
            chain.push_back(y);
            if (climb(y)) {
                return true;
            }
            chain.pop_back();
            dead[y] = 1;
        }
        return false;
    };
    if (climb(lat.bottom())) {
        return chain;
    }
    return std::nullopt;
}

inline bool is_supersolvable(const IntersectionLattice& lat) { return modular_chain(lat).has_value(); }

/// pi_i = A_{X_i} \ A_{X_{i-1}} along a modular chain. The result is checked
/// to be nice.
inline Partition supersolvable_to_nice(const IntersectionLattice& lat, const std::vector<FlatId>& chain)
{
    if (chain.size() != lat.rank() + 1) {
        throw std::invalid_argument("supersolvable_to_nice: chain has " + std::to_string(chain.size())
                                    + " members, expected " + std::to_string(lat.rank() + 1));
    }
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& f = lat.flat(chain.at(i));
        if (f.rank != i) {
            throw std::invalid_argument("supersolvable_to_nice: chain member " + std::to_string(i) + " has rank "
                                        + std::to_string(f.rank));
        }
        if (!is_modular(lat, chain[i])) {
            throw std::invalid_argument("supersolvable_to_nice: chain member " + std::to_string(i) + " is not modular");
        }
        if (i == 0) {
            continue;
        }
        const auto& prev = lat.flat(chain[i - 1]).support;
        if (!prev.is_subset_of(f.support)) {
            throw std::invalid_argument("supersolvable_to_nice: chain is not increasing at " + std::to_string(i));
        }
        blocks.push_back((f.support - prev).indices());
    }
    if (lat.flat(chain.back()).support.count() != lat.arrangement().size()) {
        throw std::invalid_argument("supersolvable_to_nice: chain does not end at the center");
    }
    Partition pi(lat.arrangement().size(), std::move(blocks));
    if (!is_nice(lat, pi)) {
        throw std::logic_error("supersolvable_to_nice: induced partition is not nice");
    }
    return pi;
}

} // namespace arrfactor
