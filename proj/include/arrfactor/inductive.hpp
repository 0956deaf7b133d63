#pragma once

#include "arrfactor/nice.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace arrfactor {

enum class Answer { yes, no, undecided };

inline const char* to_string(Answer a)
{
    switch (a) {
    case Answer::yes:
        return "yes";
    case Answer::no:
        return "no";
    case Answer::undecided:
        return "undecided";
    }
    return "?";
}

/// The map H -> H n H0 on A \ pi_1, as indices into A''.
struct RestrictionMap {
    Triple triple;
    /// image[h] for h outside pi_1; nullopt on pi_1.
    std::vector<std::optional<std::size_t>> image;
    bool injective = true;
};

/// `t` must be the triple of A for `h0`.
inline RestrictionMap restriction_map(Triple t, const Partition& pi, std::size_t h0)
{
    const Arrangement& a = t.arrangement;
    if (pi.size() != a.size()) {
        throw std::invalid_argument("restriction_map: partition does not match the arrangement");
    }
    if (h0 >= a.size() || pi.block_of(h0) != 0) {
        throw std::invalid_argument("restriction_map: H0 = " + std::to_string(h0) + " is not in the first block");
    }
    const std::size_t n = a.size();
    RestrictionMap out{std::move(t), std::vector<std::optional<std::size_t>>(n), true};
    std::vector<char> hit(out.triple.restriction.size(), 0);
    for (std::size_t h = 0; h < n; ++h) {
        if (pi.block_of(h) == 0) {
            continue;
        }
        const auto img = *out.triple.trace[h];
        out.image[h] = img;
        if (hit[img]) {
            out.injective = false;
        }
        hit[img] = 1;
    }
    return out;
}

inline RestrictionMap restriction_map(const Arrangement& a, const Partition& pi, std::size_t h0)
{
    if (h0 >= a.size()) {
        throw std::invalid_argument("restriction_map: H0 = " + std::to_string(h0) + " out of range");
    }
    return restriction_map(triple(a, h0), pi, h0);
}

enum class TripleFailure { none, blocks_collide, not_injective, not_onto };

inline const char* to_string(TripleFailure f)
{
    switch (f) {
    case TripleFailure::none:
        return "none";
    case TripleFailure::blocks_collide:
        return "blocks collide";
    case TripleFailure::not_injective:
        return "restriction map not injective";
    case TripleFailure::not_onto:
        return "restriction map not onto";
    }
    return "?";
}

/// pi' = nonempty pi_i n A' and pi'' = (R(pi_2), ..., R(pi_s)), where R is the
/// restriction map. pi'' is only a partition of A'' when R is onto and the
/// images are disjoint; the first failed condition is reported.
struct TriplePartitions {
    RestrictionMap map;
    Partition deletion;
    std::optional<Partition> restriction;
    TripleFailure failure = TripleFailure::none;
};

inline TriplePartitions induced_partitions_of_triple(RestrictionMap map, const Partition& pi, std::size_t h0)
{
    const std::size_t n = map.triple.arrangement.size();
    TriplePartitions out{std::move(map), {}, std::nullopt, TripleFailure::none};

    std::vector<std::vector<std::size_t>> del_blocks;
    for (const auto& blk : pi.blocks()) {
        std::vector<std::size_t> b;
        for (auto h : blk) {
            if (h != h0) {
                b.push_back(h < h0 ? h : h - 1);
            }
        }
        if (!b.empty()) {
            del_blocks.push_back(std::move(b));
        }
    }
    out.deletion = Partition(n - 1, std::move(del_blocks));

    const std::size_t m = out.map.triple.restriction.size();
    std::vector<std::size_t> owner(m, pi.num_blocks());
    std::vector<std::vector<std::size_t>> res_blocks;
    bool collide = false;
    bool repeat = false;
    for (std::size_t b = 1; b < pi.num_blocks(); ++b) {
        std::vector<std::size_t> imgs;
        for (auto h : pi.block(b)) {
            const auto img = *out.map.image[h];
            if (owner[img] == pi.num_blocks()) {
                owner[img] = b;
                imgs.push_back(img);
            } else if (owner[img] == b) {
                repeat = true;
            } else {
                collide = true;
            }
        }
        res_blocks.push_back(std::move(imgs));
    }
    if (collide) {
        out.failure = TripleFailure::blocks_collide;
    } else if (repeat) {
        out.failure = TripleFailure::not_injective;
    } else if (std::find(owner.begin(), owner.end(), pi.num_blocks()) != owner.end()) {
        out.failure = TripleFailure::not_onto;
    } else {
        out.restriction = Partition(m, std::move(res_blocks));
    }
    return out;
}

inline TriplePartitions induced_partitions_of_triple(const Arrangement& a, const Partition& pi, std::size_t h0)
{
    return induced_partitions_of_triple(restriction_map(a, pi, h0), pi, h0);
}

/// Niceness of (A, pi), (A', pi') and (A'', pi''). When R is not injective
/// the addition-deletion statement does not apply and `applicable` is false.
struct AddDelVerdict {
    bool applicable = false;
    TripleFailure failure = TripleFailure::none;
    bool nice = false;
    bool nice_deletion = false;
    bool nice_restriction = false;
};

inline AddDelVerdict check_add_del_nice(const Arrangement& a, const Partition& pi, std::size_t h0)
{
    auto tp = induced_partitions_of_triple(a, pi, h0);
    AddDelVerdict v;
    v.failure = tp.failure;
    v.applicable = tp.map.injective;
    v.nice = is_nice(a, pi);
    v.nice_deletion = is_nice(tp.map.triple.deletion, tp.deletion);
    v.nice_restriction = tp.restriction && is_nice(tp.map.triple.restriction, *tp.restriction);
    return v;
}

/// Derivation that (A, pi) is inductively factored. `partition` has H0's
/// block first; leaves (empty arrangements) have no H0 and no children.
struct IfacCertificate {
    std::size_t dim = 0;
    std::size_t hyperplanes = 0;
    Partition partition;
    std::optional<std::size_t> h0;
    std::shared_ptr<const IfacCertificate> deletion;
    std::shared_ptr<const IfacCertificate> restriction;
};

struct IfacResult {
    Answer answer = Answer::no;
    std::shared_ptr<const IfacCertificate> certificate;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Hyperplane keys in order, with normalized block labels.
inline std::string pair_key(const Arrangement& a, const Partition& pi)
{
    std::string k = std::to_string(a.dim()) + "|" + std::to_string(a.conductor());
    std::vector<std::size_t> relabel(pi.num_blocks(), pi.num_blocks());
    std::size_t next = 0;
    for (std::size_t h = 0; h < a.size(); ++h) {
        auto& l = relabel[pi.block_of(h)];
        if (l == pi.num_blocks()) {
            l = next++;
        }
        k += "|" + a[h].key() + "#" + std::to_string(l);
    }
    return k;
}

class IfacSearch {
public:
    explicit IfacSearch(std::uint64_t budget) : budget_(budget) {}

    /// Is (A, pi) in IFAC? pi is taken as a set of blocks; any block may
    /// play the role of pi_1.
    std::pair<Answer, std::shared_ptr<const IfacCertificate>> pair(const Arrangement& a, const Partition& pi)
    {
        if (a.empty()) {
            auto leaf = std::make_shared<IfacCertificate>();
            leaf->dim = a.dim();
            leaf->partition = Partition(0, {});
            return {Answer::yes, leaf};
        }
        const std::string key = pair_key(a, pi);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        if (budget_ != 0 && nodes_ >= budget_) {
            return {Answer::undecided, nullptr};
        }
        ++nodes_;
        bool undecided = false;
        const std::string order = ordered_key(a);
        for (std::size_t b = 0; b < pi.num_blocks(); ++b) {
            const Partition rho = pi.with_first(b);
            for (auto h0 : rho.block(0)) {
                auto tp = induced_partitions_of_triple(restriction_map(triple_of(a, order, h0), rho, h0), rho, h0);
                if (!tp.map.injective || !tp.restriction) {
                    continue;
                }
                const auto& del = tp.map.triple.deletion;
                const auto& res = tp.map.triple.restriction;
                if (!is_nice(lattice_of(del), tp.deletion) || !is_nice(lattice_of(res), *tp.restriction)) {
                    continue;
                }
                auto [ad, cd] = pair(del, tp.deletion);
                if (ad == Answer::no) {
                    continue;
                }
                auto [ar, cr] = pair(res, *tp.restriction);
                if (ar == Answer::no) {
                    continue;
                }
                if (ad == Answer::undecided || ar == Answer::undecided) {
                    undecided = true;
                    continue;
                }
                auto cert = std::make_shared<IfacCertificate>();
                cert->dim = a.dim();
                cert->hyperplanes = a.size();
                cert->partition = rho;
                cert->h0 = h0;
                cert->deletion = cd;
                cert->restriction = cr;
                std::pair<Answer, std::shared_ptr<const IfacCertificate>> out{Answer::yes, cert};
                memo_.emplace(key, out);
                return out;
            }
        }
        std::pair<Answer, std::shared_ptr<const IfacCertificate>> out{undecided ? Answer::undecided : Answer::no,
                                                                      nullptr};
        if (!undecided) {
            memo_.emplace(key, out);
        }
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // the same deletions and restrictions recur under many partitions
    static std::string ordered_key(const Arrangement& a)
    {
        std::string k = std::to_string(a.dim()) + "|" + std::to_string(a.conductor());
        for (const auto& h : a.hyperplanes()) {
            k += "|" + h.key();
        }
        return k;
    }

    const Triple& triple_of(const Arrangement& a, const std::string& order, std::size_t h0)
    {
        const std::string k = order + "@" + std::to_string(h0);
        auto it = triples_.find(k);
        if (it == triples_.end()) {
            it = triples_.emplace(k, triple(a, h0)).first;
        }
        return it->second;
    }

    const IntersectionLattice& lattice_of(const Arrangement& a)
    {
        const std::string k = ordered_key(a);
        auto it = lattices_.find(k);
        if (it == lattices_.end()) {
            it = lattices_.emplace(k, std::make_unique<IntersectionLattice>(build_lattice(a))).first;
        }
        return *it->second;
    }

    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::unordered_map<std::string, std::pair<Answer, std::shared_ptr<const IfacCertificate>>> memo_;
    std::unordered_map<std::string, Triple> triples_;
    std::unordered_map<std::string, std::unique_ptr<IntersectionLattice>> lattices_;
};

} // namespace detail

/// Is (A, pi) inductively factored for the given partition?
inline IfacResult is_inductively_factored_pair(const Arrangement& a, const Partition& pi, std::uint64_t budget = 0)
{
    if (pi.size() != a.size()) {
        throw std::invalid_argument("is_inductively_factored: partition does not match the arrangement");
    }
    detail::IfacSearch search(budget);
    auto [ans, cert] = search.pair(a, pi);
    return IfacResult{ans, cert, search.nodes()};
}

/// Some nice partition of A is inductively factored. Tries every nice
/// partition, every block as pi_1 and every H0 in it; (A, pi) pairs are
/// memoized on their exact coordinates. `budget` caps the number of pairs
/// examined (0 = unlimited); running out yields `undecided`.
inline IfacResult is_inductively_factored(const Arrangement& a, std::uint64_t budget = 0)
{
    detail::IfacSearch search(budget);
    IfacResult res;
    bool undecided = false;
    const auto lat = build_lattice(a);
    auto scan = enumerate_nice(lat, [&](const Partition& pi) {
        auto [ans, cert] = search.pair(a, pi);
        if (ans == Answer::yes) {
            res.answer = Answer::yes;
            res.certificate = cert;
            return false;
        }
        if (ans == Answer::undecided) {
            undecided = true;
        }
        return true;
    });
    if (res.answer != Answer::yes && (undecided || scan.status == SearchStatus::budget_exceeded)) {
        res.answer = Answer::undecided;
    }
    res.nodes = search.nodes();
    return res;
}

/// Re-check a certificate from scratch against (A, cert.partition).
inline bool verify_ifac_certificate(const Arrangement& a, const IfacCertificate& cert)
{
    if (a.empty()) {
        return cert.partition.size() == 0 && !cert.h0;
    }
    if (!cert.h0 || !cert.deletion || !cert.restriction || cert.partition.size() != a.size()
        || cert.dim != a.dim()) {
        return false;
    }
    if (!is_nice(a, cert.partition) || cert.partition.block_of(*cert.h0) != 0) {
        return false;
    }
    auto tp = induced_partitions_of_triple(a, cert.partition, *cert.h0);
    if (!tp.map.injective || !tp.restriction) {
        return false;
    }
    // children may list the same blocks in another order
    auto same_blocks = [](const Partition& x, const Partition& y) {
        auto bx = x.blocks();
        auto by = y.blocks();
        std::sort(bx.begin(), bx.end());
        std::sort(by.begin(), by.end());
        return x.size() == y.size() && bx == by;
    };
    return same_blocks(cert.deletion->partition, tp.deletion) && same_blocks(cert.restriction->partition, *tp.restriction)
        && verify_ifac_certificate(tp.map.triple.deletion, *cert.deletion)
        && verify_ifac_certificate(tp.map.triple.restriction, *cert.restriction);
}

using ExpSet = std::vector<long>;

/// Derivation that A is inductively free. H0 is stored as a hyperplane, so a
/// certificate holds for every ordering of the same arrangement.
struct IfCertificate {
    ExpSet exponents;
    std::optional<Hyperplane> h0;
    std::shared_ptr<const IfCertificate> deletion;
    std::shared_ptr<const IfCertificate> restriction;
};

struct IfResult {
    Answer answer = Answer::no;
    /// Ascending, length dim A, zeros included.
    ExpSet exponents;
    std::shared_ptr<const IfCertificate> certificate;
    std::uint64_t nodes = 0;
};

namespace detail {

/// exp A from exp A' and exp A'' when exp A'' sits inside exp A' with one
/// exponent b left over (b becomes b + 1).
inline std::optional<ExpSet> added_exponents(const ExpSet& del, const ExpSet& res)
{
    std::multiset<long> rest(del.begin(), del.end());
    for (auto e : res) {
        auto it = rest.find(e);
        if (it == rest.end()) {
            return std::nullopt;
        }
        rest.erase(it);
    }
    if (rest.size() != 1) {
        return std::nullopt;
    }
    ExpSet exps = res;
    exps.push_back(*rest.begin() + 1);
    std::sort(exps.begin(), exps.end());
    return exps;
}

/// Integer roots of the characteristic polynomial padded with zeros to dim A.
inline std::optional<ExpSet> polynomial_exponents(const Arrangement& a)
{
    const auto lat = build_lattice(a);
    auto roots = integer_root_multiset(char_poly(lat));
    if (!roots || roots->size() != lat.rank()) {
        return std::nullopt;
    }
    ExpSet exps(a.dim() - roots->size(), 0);
    exps.insert(exps.end(), roots->begin(), roots->end());
    std::sort(exps.begin(), exps.end());
    return exps;
}

class IfSearch {
public:
    using Node = std::pair<Answer, std::shared_ptr<const IfCertificate>>;

    explicit IfSearch(std::uint64_t budget) : budget_(budget) {}

    Node run(const Arrangement& a)
    {
        if (a.empty()) {
            return {Answer::yes, std::make_shared<IfCertificate>(IfCertificate{ExpSet(a.dim(), 0), {}, {}, {}})};
        }
        const std::string key = a.key();
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        if (budget_ != 0 && nodes_ >= budget_) {
            return {Answer::undecided, nullptr};
        }
        ++nodes_;
        // a free arrangement has a split characteristic polynomial
        const auto expected = polynomial_exponents(a);
        if (!expected) {
            memo_.emplace(key, Node{Answer::no, nullptr});
            return {Answer::no, nullptr};
        }
        bool undecided = false;
        for (std::size_t h0 = 0; h0 < a.size(); ++h0) {
            const auto t = triple(a, h0);
            auto [ad, cd] = run(t.deletion);
            if (ad == Answer::no) {
                continue;
            }
            auto [ar, cr] = run(t.restriction);
            if (ar == Answer::no) {
                continue;
            }
            if (ad == Answer::undecided || ar == Answer::undecided) {
                undecided = true;
                continue;
            }
            auto exps = added_exponents(cd->exponents, cr->exponents);
            if (!exps) {
                continue;
            }
            if (*exps != *expected) {
                throw std::logic_error("is_inductively_free: exponents disagree with the characteristic polynomial");
            }
            Node out{Answer::yes, std::make_shared<IfCertificate>(IfCertificate{*exps, a[h0], cd, cr})};
            memo_.emplace(key, out);
            return out;
        }
        Node out{undecided ? Answer::undecided : Answer::no, nullptr};
        if (!undecided) {
            memo_.emplace(key, out);
        }
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::unordered_map<std::string, Node> memo_;
};

} // namespace detail

/// Inductive freeness by recursion over triples, memoized on the
/// (order-free) arrangement key. `budget` caps the number of arrangements
/// examined (0 = unlimited).
inline IfResult is_inductively_free(const Arrangement& a, std::uint64_t budget = 0)
{
    detail::IfSearch search(budget);
    auto [ans, cert] = search.run(a);
    IfResult out{ans, {}, cert, search.nodes()};
    if (cert) {
        out.exponents = cert->exponents;
    }
    return out;
}

/// Re-check a freeness derivation from scratch.
inline bool verify_if_certificate(const Arrangement& a, const IfCertificate& cert)
{
    if (a.empty()) {
        return !cert.h0 && cert.exponents == ExpSet(a.dim(), 0);
    }
    if (!cert.h0 || !cert.deletion || !cert.restriction) {
        return false;
    }
    const auto h0 = a.index_of(*cert.h0);
    if (!h0) {
        return false;
    }
    const auto t = triple(a, *h0);
    if (!verify_if_certificate(t.deletion, *cert.deletion) || !verify_if_certificate(t.restriction, *cert.restriction)) {
        return false;
    }
    auto exps = detail::added_exponents(cert.deletion->exponents, cert.restriction->exponents);
    return exps && *exps == cert.exponents && detail::polynomial_exponents(a) == exps;
}

} // namespace arrfactor
