#pragma once

#include "arrfactor/hereditary.hpp"
#include "arrfactor/supersolvable.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrfactor {

using Json = nlohmann::ordered_json;

inline Json blocks_to_json(const Partition& pi)
{
    Json blocks = Json::array();
    for (const auto& b : pi.blocks()) {
        blocks.push_back(b);
    }
    return blocks;
}

inline Partition blocks_from_json(const Json& j, std::size_t n)
{
    if (!j.is_array()) {
        throw std::invalid_argument("certificate: 'blocks' must be an array");
    }
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : j) {
        blocks.push_back(b.get<std::vector<std::size_t>>());
    }
    return Partition(n, std::move(blocks));
}

namespace detail {

inline void expect_kind(const Json& j, const char* kind)
{
    if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind) {
        throw std::invalid_argument(std::string("certificate: expected kind '") + kind + "'");
    }
}

} // namespace detail

inline Json partition_to_json(const Partition& pi)
{
    return Json{{"kind", "nice-partition"}, {"hyperplanes", pi.size()}, {"blocks", blocks_to_json(pi)}};
}

inline Partition partition_from_json(const Json& j)
{
    detail::expect_kind(j, "nice-partition");
    return blocks_from_json(j.at("blocks"), j.at("hyperplanes").get<std::size_t>());
}

inline Json chain_to_json(const IntersectionLattice& lat, const std::vector<FlatId>& chain)
{
    Json flats = Json::array();
    for (auto x : chain) {
        flats.push_back(lat.flat(x).support.indices());
    }
    return Json{{"kind", "modular-chain"}, {"chain", flats}};
}

/// Flats named by their supports; throws if a support is not a flat.
inline std::vector<FlatId> chain_from_json(const IntersectionLattice& lat, const Json& j)
{
    detail::expect_kind(j, "modular-chain");
    std::vector<FlatId> chain;
    for (const auto& s : j.at("chain")) {
        const auto idx = s.get<std::vector<std::size_t>>();
        for (auto i : idx) {
            if (i >= lat.arrangement().size()) {
                throw std::invalid_argument("certificate: hyperplane index " + std::to_string(i) + " out of range");
            }
        }
        auto id = lat.find(BitSet::from_indices(lat.arrangement().size(), idx));
        if (!id) {
            throw std::invalid_argument("certificate: chain member is not a flat");
        }
        chain.push_back(*id);
    }
    return chain;
}

inline Json ifac_to_json(const IfacCertificate& c)
{
    Json j{{"kind", "inductive-factorization"},
           {"dim", c.dim},
           {"hyperplanes", c.hyperplanes},
           {"blocks", blocks_to_json(c.partition)}};
    if (c.h0) {
        j["h0"] = *c.h0;
        j["deletion"] = ifac_to_json(*c.deletion);
        j["restriction"] = ifac_to_json(*c.restriction);
    }
    return j;
}

inline std::shared_ptr<const IfacCertificate> ifac_from_json(const Json& j)
{
    detail::expect_kind(j, "inductive-factorization");
    auto c = std::make_shared<IfacCertificate>();
    c->dim = j.at("dim").get<std::size_t>();
    c->hyperplanes = j.at("hyperplanes").get<std::size_t>();
    c->partition = blocks_from_json(j.at("blocks"), c->hyperplanes);
    if (j.contains("h0")) {
        c->h0 = j.at("h0").get<std::size_t>();
        c->deletion = ifac_from_json(j.at("deletion"));
        c->restriction = ifac_from_json(j.at("restriction"));
    }
    return c;
}

/// H0 is written as an index into the arrangement at that node, so the
/// arrangement is needed in both directions.
inline Json if_to_json(const Arrangement& a, const IfCertificate& c)
{
    Json j{{"kind", "inductive-freeness"}, {"dim", a.dim()}, {"hyperplanes", a.size()}, {"exponents", c.exponents}};
    if (c.h0) {
        const auto h0 = a.index_of(*c.h0);
        if (!h0) {
            throw std::invalid_argument("certificate: H0 is not a hyperplane of the arrangement");
        }
        const auto t = triple(a, *h0);
        j["h0"] = *h0;
        j["deletion"] = if_to_json(t.deletion, *c.deletion);
        j["restriction"] = if_to_json(t.restriction, *c.restriction);
    }
    return j;
}

inline std::shared_ptr<const IfCertificate> if_from_json(const Arrangement& a, const Json& j)
{
    detail::expect_kind(j, "inductive-freeness");
    if (j.at("dim").get<std::size_t>() != a.dim() || j.at("hyperplanes").get<std::size_t>() != a.size()) {
        throw std::invalid_argument("certificate: node does not match the arrangement");
    }
    auto c = std::make_shared<IfCertificate>();
    c->exponents = j.at("exponents").get<ExpSet>();
    if (j.contains("h0")) {
        const auto h0 = j.at("h0").get<std::size_t>();
        if (h0 >= a.size()) {
            throw std::invalid_argument("certificate: h0 out of range");
        }
        const auto t = triple(a, h0);
        c->h0 = a[h0];
        c->deletion = if_from_json(t.deletion, j.at("deletion"));
        c->restriction = if_from_json(t.restriction, j.at("restriction"));
    }
    return c;
}

inline Json hereditary_to_json(const HereditaryResult& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json je{{"support", e.support.indices()}, {"answer", to_string(e.answer)}};
        if (e.certificate) {
            je["certificate"] = ifac_to_json(*e.certificate);
        } else if (e.partition) {
            je["certificate"] = partition_to_json(*e.partition);
        }
        entries.push_back(je);
    }
    return Json{{"kind", "hereditary"},
                {"mode", r.shortcut ? "rank-3-shortcut" : "all-restrictions"},
                {"restrictions", entries}};
}

/// A "yes" hereditary certificate: a nice partition for the restriction to
/// every flat, or for A itself when the rank-3 shortcut applies.
inline bool verify_hereditary_json(const IntersectionLattice& lat, const Json& j)
{
    detail::expect_kind(j, "hereditary");
    const auto mode = j.at("mode").get<std::string>();
    const auto n = lat.arrangement().size();
    std::vector<bool> seen(lat.size(), false);
    for (const auto& e : j.at("restrictions")) {
        if (e.at("answer") != "yes" || !e.contains("certificate")) {
            return false;
        }
        const auto idx = e.at("support").get<std::vector<std::size_t>>();
        for (auto i : idx) {
            if (i >= n) {
                return false;
            }
        }
        const auto x = lat.find(BitSet::from_indices(n, idx));
        if (!x || seen[*x]) {
            return false;
        }
        seen[*x] = true;
        const Arrangement res = *x == lat.bottom() ? lat.arrangement() : restriction(lat, *x);
        const Partition pi = partition_from_json(e.at("certificate"));
        if (pi.size() != res.size() || !is_nice(res, pi)) {
            return false;
        }
    }
    if (mode == "rank-3-shortcut") {
        return lat.rank() <= 3 && seen[lat.bottom()];
    }
    if (mode != "all-restrictions") {
        return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

} // namespace arrfactor
