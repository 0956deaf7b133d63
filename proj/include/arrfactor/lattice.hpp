#pragma once

#include "arrfactor/arrangement.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrfactor {

using FlatId = std::uint32_t;

/// Element X of L(A), identified with its support A_X.
struct Flat {
    BitSet support;
    std::size_t rank = 0;
    /// `rank` hyperplanes whose normals span the annihilator of X.
    std::vector<std::size_t> generators;
    /// Basis of the subspace X itself (dim V - rank vectors), canonical:
    /// read off the RREF of the stacked support normals.
    std::vector<CycVector> basis;
};

namespace detail {

inline std::vector<CycVector> subspace_basis(const Arrangement& a, const std::vector<std::size_t>& normals)
{
    std::vector<CycVector> rows;
    rows.reserve(normals.size());
    for (auto i : normals) {
        rows.push_back(a[i].normal());
    }
    return kernel_basis(CycMatrix::from_rows(a.field(), rows, a.dim()));
}

/// Covector of h expressed on the subspace with the given basis.
inline CycVector restricted_covector(const Hyperplane& h, const std::vector<CycVector>& basis)
{
    CycVector r;
    r.reserve(basis.size());
    for (const auto& b : basis) {
        r.push_back(dot(h.normal(), b));
    }
    return r;
}

inline bool is_zero_vector(const CycVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const CycNum& c) { return c.is_zero(); });
}

} // namespace detail

/// Exact rank of the stacked normals of the hyperplanes in S.
inline std::size_t rank_of_subset(const Arrangement& a, const BitSet& s)
{
    if (s.empty()) {
        return 0;
    }
    std::vector<CycVector> rows;
    for (auto i : s.indices()) {
        rows.push_back(a[i].normal());
    }
    return rank(CycMatrix::from_rows(a.field(), rows, a.dim()));
}

/// The ranked poset of all flats. Flats are stored rank by rank, so each
/// stratum is a contiguous id range; id 0 is V.
class IntersectionLattice {
public:
    const Arrangement& arrangement() const { return arrangement_; }
    std::size_t size() const { return flats_.size(); }
    std::size_t rank() const { return strata_.size() - 1; }

    const Flat& flat(FlatId id) const { return flats_.at(id); }
    const std::vector<Flat>& flats() const { return flats_; }

    FlatId bottom() const { return 0; }
    FlatId top() const { return static_cast<FlatId>(flats_.size() - 1); }

    /// Ids of the flats of rank k.
    std::vector<FlatId> stratum(std::size_t k) const
    {
        std::vector<FlatId> ids;
        if (k >= strata_.size()) {
            return ids;
        }
        for (FlatId id = strata_[k].first; id < strata_[k].second; ++id) {
            ids.push_back(id);
        }
        return ids;
    }

    std::size_t stratum_size(std::size_t k) const
    {
        return k < strata_.size() ? strata_[k].second - strata_[k].first : 0;
    }

    std::optional<FlatId> find(const BitSet& support) const
    {
        auto it = index_.find(support);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// X v H: the flat X intersected with hyperplane h.
    FlatId join(FlatId x, std::size_t h) const { return join_[static_cast<std::size_t>(x) * arrangement_.size() + h]; }

    FlatId join(FlatId x, FlatId y) const
    {
        FlatId cur = x;
        for (auto h : flats_[y].generators) {
            cur = join(cur, h);
        }
        return cur;
    }

    /// X ^ Y: the flat with support A_X intersect A_Y.
    FlatId meet(FlatId x, FlatId y) const
    {
        auto id = find(flats_[x].support & flats_[y].support);
        if (!id) {
            throw std::logic_error("IntersectionLattice::meet: support intersection is not closed");
        }
        return *id;
    }

    /// X <= Y in L(A), i.e. Y is contained in X as subspaces.
    bool leq(FlatId x, FlatId y) const { return flats_[x].support.is_subset_of(flats_[y].support); }

    /// Smallest flat whose support contains s.
    FlatId closure(const BitSet& s) const
    {
        FlatId cur = bottom();
        for (auto h : s.indices()) {
            cur = join(cur, h);
        }
        return cur;
    }

    std::size_t rank_of_subset(const BitSet& s) const { return flats_[closure(s)].rank; }

    /// Flats of rank >= 1 whose support contains h.
    const std::vector<FlatId>& flats_through(std::size_t h) const { return through_.at(h); }

    /// Upper covers of x.
    const std::vector<FlatId>& covers(FlatId x) const { return covers_.at(x); }

    friend IntersectionLattice build_lattice(const Arrangement& a);

private:
    explicit IntersectionLattice(Arrangement a) : arrangement_(std::move(a)) {}

    Arrangement arrangement_;
    std::vector<Flat> flats_;
    std::vector<std::pair<FlatId, FlatId>> strata_;
    std::unordered_map<BitSet, FlatId, BitSetHash> index_;
    std::vector<FlatId> join_;
    std::vector<std::vector<FlatId>> through_;
    std::vector<std::vector<FlatId>> covers_;
};

/// All flats, rank by rank. The covers of a flat X correspond to the distinct
/// traces X n H: hyperplanes outside A_X are grouped by their scaled covector
/// on X, and each group closes A_X to the support of one cover.
inline IntersectionLattice build_lattice(const Arrangement& a)
{
    IntersectionLattice lat(a);
    const std::size_t n = a.size();

    Flat v;
    v.support = BitSet(n);
    v.rank = 0;
    v.basis = detail::subspace_basis(a, {});
    lat.flats_.push_back(std::move(v));
    lat.index_.emplace(lat.flats_[0].support, 0);
    lat.strata_.emplace_back(0, 1);

    std::size_t k = 0;
    while (true) {
        const auto [lo, hi] = lat.strata_[k];
        const FlatId next_lo = static_cast<FlatId>(lat.flats_.size());
        for (FlatId x = lo; x < hi; ++x) {
            // flats_ may reallocate below, so copy what we need
            const BitSet support = lat.flats_[x].support;
            const std::vector<CycVector> basis = lat.flats_[x].basis;
            const std::vector<std::size_t> generators = lat.flats_[x].generators;

            std::unordered_map<std::string, std::size_t> group_of;
            std::vector<std::vector<std::size_t>> groups;
            for (std::size_t h = 0; h < n; ++h) {
                if (support.test(h)) {
                    continue;
                }
                CycVector r = detail::restricted_covector(a[h], basis);
                if (detail::is_zero_vector(r)) {
                    throw std::logic_error("build_lattice: support of flat is not closed");
                }
                auto key = Hyperplane(std::move(r)).key();
                auto [it, fresh] = group_of.emplace(std::move(key), groups.size());
                if (fresh) {
                    groups.emplace_back();
                }
                groups[it->second].push_back(h);
            }
            std::vector<FlatId> ups;
            for (const auto& g : groups) {
                BitSet ysupport = support;
                for (auto h : g) {
                    ysupport.set(h);
                }
                FlatId yid;
                if (auto found = lat.index_.find(ysupport); found != lat.index_.end()) {
                    yid = found->second;
                } else {
                    Flat y;
                    y.support = ysupport;
                    y.rank = k + 1;
                    y.generators = generators;
                    y.generators.push_back(g.front());
                    y.basis = detail::subspace_basis(a, y.generators);
                    yid = static_cast<FlatId>(lat.flats_.size());
                    lat.flats_.push_back(std::move(y));
                    lat.index_.emplace(ysupport, yid);
                }
                ups.push_back(yid);
            }
            lat.covers_.push_back(std::move(ups));
        }
        const FlatId next_hi = static_cast<FlatId>(lat.flats_.size());
        if (next_hi == next_lo) {
            break;
        }
        lat.strata_.emplace_back(next_lo, next_hi);
        ++k;
    }

    // join table: X v h
    lat.join_.assign(lat.flats_.size() * n, 0);
    for (FlatId x = 0; x < lat.flats_.size(); ++x) {
        const auto& fx = lat.flats_[x];
        for (std::size_t h = 0; h < n; ++h) {
            if (fx.support.test(h)) {
                lat.join_[static_cast<std::size_t>(x) * n + h] = x;
            }
        }
        for (auto y : lat.covers_[x]) {
            for (auto h : (lat.flats_[y].support - fx.support).indices()) {
                lat.join_[static_cast<std::size_t>(x) * n + h] = y;
            }
        }
    }

    lat.through_.assign(n, {});
    for (FlatId x = 1; x < lat.flats_.size(); ++x) {
        for (auto h : lat.flats_[x].support.indices()) {
            lat.through_[h].push_back(x);
        }
    }
    return lat;
}

/// mu(V, X) for every flat, from mu(V,V) = 1 and mu(V,X) = -sum_{Y<X} mu(V,Y).
inline std::vector<Int> mobius_from_bottom(const IntersectionLattice& lat)
{
    std::vector<Int> mu(lat.size(), 0);
    mu[0] = 1;
    for (FlatId x = 1; x < lat.size(); ++x) {
        const auto& fx = lat.flat(x);
        Int sum = 0;
        for (FlatId y = 0; y < x && lat.flat(y).rank < fx.rank; ++y) {
            if (lat.flat(y).support.is_subset_of(fx.support)) {
                sum += mu[y];
            }
        }
        mu[x] = -sum;
    }
    return mu;
}

/// pi(A, t) = sum_X mu(V, X) (-t)^{r(X)}.
inline IntPoly char_poly(const IntersectionLattice& lat)
{
    const auto mu = mobius_from_bottom(lat);
    std::vector<Int> coeffs(lat.rank() + 1, 0);
    for (FlatId x = 0; x < lat.size(); ++x) {
        const auto r = lat.flat(x).rank;
        coeffs[r] += (r % 2 == 0) ? mu[x] : Int(-mu[x]);
    }
    return IntPoly(std::move(coeffs));
}

inline IntPoly char_poly(const Arrangement& a) { return char_poly(build_lattice(a)); }

/// If p = prod (1 + b_i t) with positive integers b_i, the b_i in ascending
/// order; otherwise nullopt.
inline std::optional<std::vector<long>> integer_root_multiset(const IntPoly& p)
{
    if (p.is_zero() || p.coeff(0) != 1) {
        return std::nullopt;
    }
    std::vector<long> roots;
    IntPoly rest = p;
    while (rest.degree() > 0) {
        const Int lead = rest.leading();
        if (lead <= 0 || !lead.fits_slong_p()) {
            return std::nullopt;
        }
        const long l = lead.get_si();
        bool found = false;
        for (long b = 1; b <= l && !found; ++b) {
            if (l % b != 0) {
                continue;
            }
            if (rest.evaluate(Rat(-1, b)) == 0) {
                rest = rest.exact_div(IntPoly{1, b});
                roots.push_back(b);
                found = true;
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    if (rest.coeff(0) != 1) {
        return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// A_X: the hyperplanes containing X, same ambient space.
inline Arrangement localization(const IntersectionLattice& lat, FlatId x)
{
    return subarrangement(lat.arrangement(), lat.flat(x).support);
}

/// A^X together with the trace map: image[h] is the index of X n H in A^X, or
/// nullopt for h in A_X.
struct Restriction {
    Arrangement arrangement;
    std::vector<std::optional<std::size_t>> image;
};

/// Restriction to the subspace X = intersection of the hyperplanes in
/// `support`, in the canonical basis of X. Throws if `support` is not closed.
inline Restriction restrict_to(const Arrangement& a, const BitSet& support)
{
    std::vector<std::size_t> members = support.indices();
    const auto basis = detail::subspace_basis(a, members);
    const CycField& field = a.field();
    std::vector<Hyperplane> hs;
    std::vector<std::optional<std::size_t>> image(a.size());
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t h = 0; h < a.size(); ++h) {
        CycVector r = detail::restricted_covector(a[h], basis);
        const bool vanishes = detail::is_zero_vector(r);
        if (support.test(h)) {
            continue;
        }
        if (vanishes) {
            throw std::invalid_argument("restriction: support is not a flat (hyperplane " + std::to_string(h)
                                        + " contains X but is missing)");
        }
        Hyperplane hr(std::move(r));
        auto [it, fresh] = seen.emplace(hr.key(), hs.size());
        if (fresh) {
            hs.push_back(std::move(hr));
        }
        image[h] = it->second;
    }
    return Restriction{Arrangement(basis.size(), field, std::move(hs)), std::move(image)};
}

inline Restriction restrict_to(const IntersectionLattice& lat, FlatId x)
{
    return restrict_to(lat.arrangement(), lat.flat(x).support);
}

inline Arrangement restriction(const IntersectionLattice& lat, FlatId x) { return restrict_to(lat, x).arrangement; }

/// (A, A', A'') for the hyperplane h0, with the trace map of A' into A''.
struct Triple {
    Arrangement arrangement;
    Arrangement deletion;
    Arrangement restriction;
    /// trace[i] = index in A'' of (H_i n H0) for every i != h0.
    std::vector<std::optional<std::size_t>> trace;
};

inline Triple triple(const Arrangement& a, std::size_t h0)
{
    if (h0 >= a.size()) {
        throw std::out_of_range("triple: hyperplane index " + std::to_string(h0) + " out of range");
    }
    BitSet s(a.size());
    s.set(h0);
    auto r = restrict_to(a, s);
    return Triple{a, deletion(a, h0), std::move(r.arrangement), std::move(r.image)};
}

} // namespace arrfactor
