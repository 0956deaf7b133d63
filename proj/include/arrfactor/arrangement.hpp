#pragma once

#include "arrfactor/bitset.hpp"
#include "arrfactor/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrfactor {

/// Linear hyperplane ker(alpha), stored by its covector alpha scaled so that
/// the first nonzero coordinate is 1.
class Hyperplane {
public:
    explicit Hyperplane(CycVector normal) : normal_(std::move(normal))
    {
        if (normal_.empty()) {
            throw std::invalid_argument("Hyperplane: empty covector");
        }
        auto lead = std::find_if(normal_.begin(), normal_.end(), [](const CycNum& c) { return !c.is_zero(); });
        if (lead == normal_.end()) {
            throw std::invalid_argument("Hyperplane: zero covector");
        }
        if (!lead->is_one()) {
            const CycNum inv = lead->inverse();
            for (auto it = lead; it != normal_.end(); ++it) {
                if (!it->is_zero()) {
                    *it = *it * inv;
                }
            }
        }
        const CycField* f = &normal_.front().field();
        for (const auto& c : normal_) {
            if (&c.field() != f) {
                throw std::invalid_argument("Hyperplane: coordinates over different conductors");
            }
        }
    }

    const CycVector& normal() const { return normal_; }
    std::size_t dim() const { return normal_.size(); }
    const CycField& field() const { return normal_.front().field(); }

    /// Exact textual key; equal keys iff equal hyperplanes.
    std::string key() const
    {
        std::string k;
        for (std::size_t j = 0; j < normal_.size(); ++j) {
            if (j != 0) {
                k += ';';
            }
            const auto& c = normal_[j].coeffs();
            for (std::size_t p = 0; p < c.size(); ++p) {
                if (p != 0) {
                    k += ',';
                }
                k += c[p].get_str();
            }
        }
        return k;
    }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.normal_ == b.normal_; }

private:
    CycVector normal_;
};

/// Central arrangement: ordered list of distinct hyperplanes in an
/// l-dimensional space over Q(zeta_n). Order is construction order and is
/// preserved by every derived arrangement.
class Arrangement {
public:
    Arrangement(std::size_t dim, const CycField& field) : dim_(dim), field_(&field) {}

    Arrangement(std::size_t dim, const CycField& field, std::vector<Hyperplane> hyperplanes)
        : dim_(dim), field_(&field), hyperplanes_(std::move(hyperplanes))
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
            const auto& h = hyperplanes_[i];
            if (h.dim() != dim_) {
                throw std::invalid_argument("Arrangement: hyperplane " + std::to_string(i) + " has dimension "
                                            + std::to_string(h.dim()) + ", expected " + std::to_string(dim_));
            }
            if (&h.field() != field_) {
                throw std::invalid_argument("Arrangement: hyperplane " + std::to_string(i)
                                            + " lives over a different conductor");
            }
            auto [it, fresh] = seen.emplace(h.key(), i);
            if (!fresh) {
                throw std::invalid_argument("Arrangement: hyperplanes " + std::to_string(it->second) + " and "
                                            + std::to_string(i) + " coincide");
            }
        }
    }

    /// Build from raw covectors; duplicates (after scaling) are dropped when
    /// `deduplicate` is set, otherwise rejected.
    static Arrangement from_normals(std::size_t dim, const CycField& field, const std::vector<CycVector>& normals,
                                    bool deduplicate = false)
    {
        std::vector<Hyperplane> hs;
        std::unordered_map<std::string, bool> seen;
        for (const auto& n : normals) {
            Hyperplane h(n);
            if (deduplicate && !seen.emplace(h.key(), true).second) {
                continue;
            }
            hs.push_back(std::move(h));
        }
        return Arrangement(dim, field, std::move(hs));
    }

    std::size_t dim() const { return dim_; }
    const CycField& field() const { return *field_; }
    unsigned conductor() const { return field_->conductor(); }
    std::size_t size() const { return hyperplanes_.size(); }
    bool empty() const { return hyperplanes_.empty(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_.at(i); }

    std::optional<std::size_t> index_of(const Hyperplane& h) const
    {
        for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
            if (hyperplanes_[i] == h) {
                return i;
            }
        }
        return std::nullopt;
    }

    /// Order-independent identity: dimension, conductor, sorted hyperplane keys.
    std::string key() const
    {
        std::vector<std::string> keys;
        keys.reserve(hyperplanes_.size());
        for (const auto& h : hyperplanes_) {
            keys.push_back(h.key());
        }
        std::sort(keys.begin(), keys.end());
        std::string k = std::to_string(dim_) + "|" + std::to_string(conductor());
        for (const auto& s : keys) {
            k += "|" + s;
        }
        return k;
    }

    /// 64-bit FNV-1a of key(), as 16 hex digits.
    std::string fingerprint() const
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char ch : key()) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

private:
    std::size_t dim_;
    const CycField* field_;
    std::vector<Hyperplane> hyperplanes_;
};

/// Sub-arrangement on the given support, same ambient space, order inherited.
inline Arrangement subarrangement(const Arrangement& a, const BitSet& support)
{
    std::vector<Hyperplane> hs;
    for (auto i : support.indices()) {
        hs.push_back(a[i]);
    }
    return Arrangement(a.dim(), a.field(), std::move(hs));
}

/// A' = A \ {H0}, order preserved.
inline Arrangement deletion(const Arrangement& a, std::size_t h0)
{
    if (h0 >= a.size()) {
        throw std::out_of_range("deletion: hyperplane index " + std::to_string(h0) + " out of range");
    }
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != h0) {
            hs.push_back(a[i]);
        }
    }
    return Arrangement(a.dim(), a.field(), std::move(hs));
}

/// The same arrangement with coefficients embedded into Q(zeta_m).
inline Arrangement lift(const Arrangement& a, unsigned m)
{
    const CycField& target = CycField::get(m);
    std::vector<Hyperplane> hs;
    for (const auto& h : a.hyperplanes()) {
        CycVector v;
        for (const auto& c : h.normal()) {
            v.push_back(embed(c, m));
        }
        hs.emplace_back(std::move(v));
    }
    return Arrangement(a.dim(), target, std::move(hs));
}

/// A1 x A2 in V1 + V2, over the lcm of the two conductors. Hyperplanes of A1
/// come first.
inline Arrangement product(const Arrangement& a1, const Arrangement& a2)
{
    const unsigned m = lcm_conductor(a1.conductor(), a2.conductor());
    const CycField& field = CycField::get(m);
    const std::size_t dim = a1.dim() + a2.dim();
    std::vector<Hyperplane> hs;
    for (const auto& h : a1.hyperplanes()) {
        CycVector v(dim, CycNum(field));
        for (std::size_t j = 0; j < a1.dim(); ++j) {
            v[j] = embed(h.normal()[j], m);
        }
        hs.emplace_back(std::move(v));
    }
    for (const auto& h : a2.hyperplanes()) {
        CycVector v(dim, CycNum(field));
        for (std::size_t j = 0; j < a2.dim(); ++j) {
            v[a1.dim() + j] = embed(h.normal()[j], m);
        }
        hs.emplace_back(std::move(v));
    }
    return Arrangement(dim, field, std::move(hs));
}

} // namespace arrfactor
