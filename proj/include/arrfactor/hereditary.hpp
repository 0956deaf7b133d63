#pragma once

#include "arrfactor/inductive.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace arrfactor {

enum class HereditaryMode {
    /// Restrict to every flat and decide each restriction.
    direct,
    /// For rank <= 3 only the arrangement itself is decided: every proper
    /// restriction has rank <= 2, hence is supersolvable and so factored.
    rank3_shortcut,
};

struct HereditaryEntry {
    FlatId flat;
    BitSet support;
    Answer answer = Answer::no;
    /// Nice partition of the restriction (hereditarily factored only).
    std::optional<Partition> partition;
    std::shared_ptr<const IfacCertificate> certificate;
};

struct HereditaryResult {
    Answer answer = Answer::yes;
    bool shortcut = false;
    /// One entry per flat examined, in lattice order; stops at the first
    /// failing flat.
    std::vector<HereditaryEntry> entries;
};

/// A^X is factored for every flat X.
inline HereditaryResult is_hereditarily_factored(const IntersectionLattice& lat,
                                                 HereditaryMode mode = HereditaryMode::direct,
                                                 std::uint64_t node_limit = 0)
{
    HereditaryResult out;
    // keys ignore hyperplane order, so only negative verdicts are shared
    std::unordered_set<std::string> not_nice;
    auto decide = [&](FlatId x) {
        NiceSearchResult r;
        if (x == lat.bottom()) {
            r = find_nice(lat, NiceSearchOptions{node_limit, 0});
        } else {
            const Arrangement res = restriction(lat, x);
            const std::string key = res.key();
            if (!not_nice.contains(key)) {
                r = find_nice(res, NiceSearchOptions{node_limit, 0});
                if (r.status == SearchStatus::none) {
                    not_nice.insert(key);
                }
            }
        }
        HereditaryEntry e{x, lat.flat(x).support, Answer::no, std::nullopt, nullptr};
        if (r.status == SearchStatus::found) {
            e.answer = Answer::yes;
            e.partition = r.partition;
        } else if (r.status == SearchStatus::budget_exceeded) {
            e.answer = Answer::undecided;
        }
        return e;
    };
    if (mode == HereditaryMode::rank3_shortcut && lat.rank() <= 3) {
        out.shortcut = true;
        out.entries.push_back(decide(lat.bottom()));
        out.answer = out.entries.back().answer;
        return out;
    }
    for (FlatId x = 0; x < lat.size(); ++x) {
        out.entries.push_back(decide(x));
        const Answer a = out.entries.back().answer;
        if (a == Answer::no) {
            out.answer = Answer::no;
            return out;
        }
        if (a == Answer::undecided) {
            out.answer = Answer::undecided;
        }
    }
    return out;
}

/// A^X is inductively factored for every flat X.
inline HereditaryResult is_hereditarily_inductively_factored(const IntersectionLattice& lat, std::uint64_t budget = 0,
                                                             HereditaryMode mode = HereditaryMode::direct)
{
    HereditaryResult out;
    auto decide = [&](FlatId x) {
        const Arrangement res = x == lat.bottom() ? lat.arrangement() : restriction(lat, x);
        auto r = is_inductively_factored(res, budget);
        HereditaryEntry e{x, lat.flat(x).support, r.answer, std::nullopt, r.certificate};
        if (r.certificate) {
            e.partition = r.certificate->partition;
        }
        return e;
    };
    if (mode == HereditaryMode::rank3_shortcut && lat.rank() <= 3) {
        out.shortcut = true;
        out.entries.push_back(decide(lat.bottom()));
        out.answer = out.entries.back().answer;
        return out;
    }
    for (FlatId x = 0; x < lat.size(); ++x) {
        out.entries.push_back(decide(x));
        const Answer a = out.entries.back().answer;
        if (a == Answer::no) {
            out.answer = Answer::no;
            return out;
        }
        if (a == Answer::undecided) {
            out.answer = Answer::undecided;
        }
    }
    return out;
}

} // namespace arrfactor
