#pragma once

#include "arrfactor/lattice.hpp"
#include "arrfactor/partition.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace arrfactor {

namespace detail {

inline void check_covers(const IntersectionLattice& lat, const Partition& pi)
{
    if (pi.size() != lat.arrangement().size()) {
        throw std::invalid_argument("partition covers " + std::to_string(pi.size()) + " hyperplanes, arrangement has "
                                    + std::to_string(lat.arrangement().size()));
    }
}

} // namespace detail

/// Every transversal (one hyperplane per block) is linearly independent.
/// Walks transversals block by block through the join table, dropping a
/// prefix as soon as its rank falls below its length; (depth, flat) states
/// already explored are not revisited.
inline bool is_independent(const IntersectionLattice& lat, const Partition& pi)
{
    detail::check_covers(lat, pi);
    const std::size_t s = pi.num_blocks();
    if (s > lat.rank()) {
        return false;
    }
    std::unordered_set<std::uint64_t> seen;
    std::function<bool(std::size_t, FlatId)> walk = [&](std::size_t depth, FlatId cur) {
        if (depth == s) {
            return true;
        }
        if (!seen.insert((static_cast<std::uint64_t>(depth) << 32) | cur).second) {
            return true;
        }
        for (auto h : pi.block(depth)) {
            FlatId next = lat.join(cur, h);
            if (lat.flat(next).rank != depth + 1 || !walk(depth + 1, next)) {
                return false;
            }
        }
        return true;
    };
    return walk(0, lat.bottom());
}

/// Nonempty traces pi_i n A_X. `members` lists A_X in increasing order and
/// `partition` is over positions in `members`; `block_ids[j]` is the index in
/// pi of the j-th induced block.
struct InducedPartition {
    std::vector<std::size_t> members;
    Partition partition;
    std::vector<std::size_t> block_ids;
};

inline InducedPartition induced_partition(const Partition& pi, const BitSet& support)
{
    InducedPartition out;
    out.members = support.indices();
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> slot(pi.num_blocks(), pi.num_blocks());
    for (std::size_t j = 0; j < out.members.size(); ++j) {
        const auto b = pi.block_of(out.members[j]);
        if (slot[b] == pi.num_blocks()) {
            slot[b] = blocks.size();
            blocks.emplace_back();
        }
        blocks[slot[b]].push_back(j);
    }
    // keep the order of pi
    std::vector<std::size_t> order;
    for (std::size_t b = 0; b < pi.num_blocks(); ++b) {
        if (slot[b] != pi.num_blocks()) {
            order.push_back(b);
        }
    }
    std::vector<std::vector<std::size_t>> sorted;
    for (auto b : order) {
        sorted.push_back(std::move(blocks[slot[b]]));
        out.block_ids.push_back(b);
    }
    out.partition = Partition(out.members.size(), std::move(sorted));
    return out;
}

inline InducedPartition induced_partition(const IntersectionLattice& lat, const Partition& pi, FlatId x)
{
    detail::check_covers(lat, pi);
    return induced_partition(pi, lat.flat(x).support);
}

/// First flat of rank >= 2 whose induced partition has no singleton block.
inline std::optional<FlatId> singleton_violation(const IntersectionLattice& lat, const Partition& pi)
{
    std::vector<std::size_t> count(pi.num_blocks(), 0);
    for (FlatId x = 0; x < lat.size(); ++x) {
        const auto& f = lat.flat(x);
        if (f.rank < 2) {
            continue;
        }
        std::fill(count.begin(), count.end(), 0);
        const auto members = f.support.indices();
        for (auto h : members) {
            ++count[pi.block_of(h)];
        }
        if (std::find(count.begin(), count.end(), 1) == count.end()) {
            return x;
        }
    }
    return std::nullopt;
}

/// Independent, and every flat other than V has a singleton trace. Rank-1
/// flats are skipped since their trace is a single hyperplane.
inline bool is_nice(const IntersectionLattice& lat, const Partition& pi)
{
    return is_independent(lat, pi) && !singleton_violation(lat, pi);
}

inline bool is_nice(const Arrangement& a, const Partition& pi) { return is_nice(build_lattice(a), pi); }

enum class SearchStatus { found, none, budget_exceeded };

inline const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::none:
        return "none";
    case SearchStatus::budget_exceeded:
        return "budget_exceeded";
    }
    return "?";
}

struct NiceSearchOptions {
    /// 0 means unlimited.
    std::uint64_t node_limit = 0;
    /// 0 means ARRFACTOR_THREADS, or 1 if unset.
    unsigned threads = 0;
};

struct NiceSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Partition> partition;
    /// Forced block sizes, ascending; empty when the polynomial does not split.
    std::vector<long> block_sizes;
    std::uint64_t nodes = 0;
    std::string reason;
};

inline unsigned thread_count_from_env()
{
    if (const char* s = std::getenv("ARRFACTOR_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end != s && v > 0) {
            return static_cast<unsigned>(std::min<unsigned long>(v, 256));
        }
    }
    return 1;
}

namespace detail {

/// Backtracking search for nice partitions with fixed block sizes.
///
/// Blocks are labelled by size (ascending). Each hyperplane carries a domain
/// bitmask of blocks it may still join; each flat X of rank >= 2 tracks how
/// many of its members sit in each block. Rules applied on every assignment:
///   - at most r(X) blocks meet A_X (this is exactly independence);
///   - the unmet blocks must still be reachable by unassigned members;
///   - once r(X) blocks meet A_X, the rest stays inside them, and a lone
///     singleton trace must not grow;
///   - if every unassigned member must open a new block, it may not join a
///     met one;
///   - full blocks leave all domains, and a block whose remaining capacity
///     equals its number of candidates takes all of them.
/// Empty blocks of equal size are interchangeable, so only the lowest one is
/// ever opened at a branch.
class NiceSolver {
public:
    using Mask = std::uint64_t;

    NiceSolver(const IntersectionLattice& lat, std::vector<long> sizes) : lat_(lat), sizes_(std::move(sizes))
    {
        n_ = lat.arrangement().size();
        r_ = sizes_.size();
        if (r_ > 64) {
            throw std::length_error("find_nice: rank above 64 is not supported");
        }
        for (FlatId x = 0; x < lat.size(); ++x) {
            const auto& f = lat.flat(x);
            if (f.rank < 2) {
                continue;
            }
            flat_rank_.push_back(f.rank);
            flat_members_.push_back(f.support.indices());
            flat_id_.push_back(x);
        }
        m_ = flat_rank_.size();
        through_.assign(n_, {});
        for (std::size_t c = 0; c < m_; ++c) {
            for (auto h : flat_members_[c]) {
                through_[h].push_back(c);
            }
        }
        for (std::size_t b = 0; b < r_; ++b) {
            Mask same = 0;
            for (std::size_t b2 = 0; b2 < r_; ++b2) {
                if (sizes_[b2] == sizes_[b]) {
                    same |= Mask{1} << b2;
                }
            }
            same_size_.push_back(same);
        }
    }

    struct State {
        std::vector<Mask> dom;
        std::vector<std::int8_t> label;
        std::vector<std::uint16_t> block_count;
        std::vector<std::uint8_t> count; // flat-major, r per flat
        std::vector<Mask> met;
        std::vector<std::uint8_t> open; // unassigned members per flat
        std::size_t unassigned = 0;
    };

    std::optional<State> root() const
    {
        State st;
        const Mask all = r_ == 64 ? ~Mask{0} : ((Mask{1} << r_) - 1);
        st.dom.assign(n_, all);
        st.label.assign(n_, -1);
        st.block_count.assign(r_, 0);
        st.count.assign(m_ * r_, 0);
        st.met.assign(m_, 0);
        st.open.resize(m_);
        for (std::size_t c = 0; c < m_; ++c) {
            st.open[c] = static_cast<std::uint8_t>(flat_members_[c].size());
        }
        st.unassigned = n_;
        std::vector<std::size_t> queue;
        if (!settle(st, queue)) {
            return std::nullopt;
        }
        return st;
    }

    /// Assign h to b in a copy of st and propagate; nullopt on contradiction.
    std::optional<State> branch(const State& st, std::size_t h, std::size_t b) const
    {
        State next = st;
        next.dom[h] = Mask{1} << b;
        std::vector<std::size_t> queue{h};
        if (!settle(next, queue)) {
            return std::nullopt;
        }
        return next;
    }

    /// Unassigned hyperplane with the fewest options, lowest index on ties.
    std::size_t pick(const State& st) const
    {
        std::size_t best = n_;
        int best_pc = 65;
        for (std::size_t h = 0; h < n_; ++h) {
            if (st.label[h] >= 0) {
                continue;
            }
            int pc = std::popcount(st.dom[h]);
            if (pc < best_pc) {
                best = h;
                best_pc = pc;
            }
        }
        return best;
    }

    /// Values to try for h, with interchangeable empty blocks collapsed.
    std::vector<std::size_t> values(const State& st, std::size_t h) const
    {
        std::vector<std::size_t> out;
        Mask skip = 0;
        for (Mask d = st.dom[h]; d != 0; d &= d - 1) {
            const auto b = static_cast<std::size_t>(std::countr_zero(d));
            if ((skip >> b) & 1) {
                continue;
            }
            if (st.block_count[b] == 0) {
                skip |= same_size_[b];
            }
            out.push_back(b);
        }
        return out;
    }

    Partition to_partition(const State& st) const
    {
        std::vector<std::size_t> labels(n_);
        for (std::size_t h = 0; h < n_; ++h) {
            labels[h] = static_cast<std::size_t>(st.label[h]);
        }
        return Partition::from_labels(labels);
    }

    std::size_t hyperplanes() const { return n_; }

private:
    bool restrict_dom(State& st, std::size_t h, Mask mask, std::vector<std::size_t>& queue) const
    {
        const Mask d = st.dom[h] & mask;
        if (d == 0) {
            return false;
        }
        if (d != st.dom[h]) {
            st.dom[h] = d;
            if (std::popcount(d) == 1) {
                queue.push_back(h);
            }
        }
        return true;
    }

    bool assign(State& st, std::size_t h, std::vector<std::size_t>& queue) const
    {
        const auto b = static_cast<std::size_t>(std::countr_zero(st.dom[h]));
        st.label[h] = static_cast<std::int8_t>(b);
        --st.unassigned;
        if (++st.block_count[b] > sizes_[b]) {
            return false;
        }
        if (st.block_count[b] == sizes_[b]) {
            for (std::size_t g = 0; g < n_; ++g) {
                if (st.label[g] < 0 && !restrict_dom(st, g, ~(Mask{1} << b), queue)) {
                    return false;
                }
            }
        }
        for (auto c : through_[h]) {
            auto& cnt = st.count[c * r_ + b];
            ++cnt;
            st.met[c] |= Mask{1} << b;
            --st.open[c];
            if (!check_flat(st, c, queue)) {
                return false;
            }
        }
        return true;
    }

    bool check_flat(State& st, std::size_t c, std::vector<std::size_t>& queue) const
    {
        const std::size_t k = flat_rank_[c];
        const std::size_t met = static_cast<std::size_t>(std::popcount(st.met[c]));
        const std::size_t open = st.open[c];
        if (met > k || k - met > open) {
            return false;
        }
        if (met == k) {
            Mask singles = 0;
            for (Mask m = st.met[c]; m != 0; m &= m - 1) {
                const auto b = static_cast<std::size_t>(std::countr_zero(m));
                if (st.count[c * r_ + b] == 1) {
                    singles |= Mask{1} << b;
                }
            }
            if (singles == 0) {
                return false;
            }
            if (open == 0) {
                return true;
            }
            Mask allowed = st.met[c];
            if (std::popcount(singles) == 1) {
                allowed &= ~singles;
            }
            for (auto g : flat_members_[c]) {
                if (st.label[g] < 0 && !restrict_dom(st, g, allowed, queue)) {
                    return false;
                }
            }
        } else if (k - met == open) {
            for (auto g : flat_members_[c]) {
                if (st.label[g] < 0 && !restrict_dom(st, g, ~st.met[c], queue)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool settle(State& st, std::vector<std::size_t>& queue) const
    {
        while (true) {
            while (!queue.empty()) {
                const auto h = queue.back();
                queue.pop_back();
                if (st.label[h] >= 0) {
                    continue;
                }
                if (!assign(st, h, queue)) {
                    return false;
                }
            }
            for (std::size_t b = 0; b < r_; ++b) {
                const std::size_t need = static_cast<std::size_t>(sizes_[b]) - st.block_count[b];
                if (need == 0) {
                    continue;
                }
                std::size_t avail = 0;
                for (std::size_t h = 0; h < n_; ++h) {
                    if (st.label[h] < 0 && ((st.dom[h] >> b) & 1)) {
                        ++avail;
                    }
                }
                if (avail < need) {
                    return false;
                }
                if (avail == need) {
                    for (std::size_t h = 0; h < n_; ++h) {
                        if (st.label[h] < 0 && ((st.dom[h] >> b) & 1)
                            && !restrict_dom(st, h, Mask{1} << b, queue)) {
                            return false;
                        }
                    }
                }
            }
            if (queue.empty()) {
                return true;
            }
        }
    }

    const IntersectionLattice& lat_;
    std::vector<long> sizes_;
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> flat_rank_;
    std::vector<std::vector<std::size_t>> flat_members_;
    std::vector<FlatId> flat_id_;
    std::vector<std::vector<std::size_t>> through_;
    std::vector<Mask> same_size_;
};

struct SearchControl {
    std::uint64_t node_limit = 0;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};

    bool tick()
    {
        const auto n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit != 0 && n > node_limit) {
            out_of_budget.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
};

/// Depth-first walk; `on_leaf` returns false to stop. Returns false if the
/// walk was stopped (by the callback, the budget or `cancel`).
inline bool nice_dfs(const NiceSolver& solver, const NiceSolver::State& st, SearchControl& ctl,
                     const std::function<bool(const NiceSolver::State&)>& on_leaf,
                     const std::function<bool()>& cancel = {})
{
    if (!ctl.tick() || (cancel && cancel())) {
        return false;
    }
    if (st.unassigned == 0) {
        return on_leaf(st);
    }
    const auto h = solver.pick(st);
    for (auto b : solver.values(st, h)) {
        if (auto next = solver.branch(st, h, b)) {
            if (!nice_dfs(solver, *next, ctl, on_leaf, cancel)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace detail

/// Forced block sizes for a nice partition: the integer roots of pi(A,t), or
/// nullopt when it does not split that way.
inline std::optional<std::vector<long>> forced_block_sizes(const IntersectionLattice& lat)
{
    auto roots = integer_root_multiset(char_poly(lat));
    if (!roots || roots->size() != lat.rank()) {
        return std::nullopt;
    }
    return roots;
}

/// Calls `visit` on every nice partition of A (once per set of blocks; block
/// order follows ascending size). Stops early when `visit` returns false.
inline NiceSearchResult enumerate_nice(const IntersectionLattice& lat, const std::function<bool(const Partition&)>& visit,
                                       std::uint64_t node_limit = 0)
{
    NiceSearchResult res;
    if (lat.arrangement().empty()) {
        res.status = SearchStatus::found;
        res.partition = Partition(0, {});
        visit(*res.partition);
        return res;
    }
    auto sizes = forced_block_sizes(lat);
    if (!sizes) {
        res.reason = "characteristic polynomial does not split into integer linear factors";
        return res;
    }
    res.block_sizes = *sizes;
    detail::NiceSolver solver(lat, *sizes);
    detail::SearchControl ctl;
    ctl.node_limit = node_limit;
    bool any = false;
    if (auto root = solver.root()) {
        detail::nice_dfs(solver, *root, ctl, [&](const detail::NiceSolver::State& st) {
            Partition p = solver.to_partition(st);
            if (!is_nice(lat, p)) {
                throw std::logic_error("enumerate_nice: solver produced a partition that is not nice");
            }
            if (!any) {
                res.partition = p;
            }
            any = true;
            return visit(p);
        });
    }
    res.nodes = ctl.nodes.load();
    if (ctl.out_of_budget.load()) {
        res.status = SearchStatus::budget_exceeded;
        res.reason = "node budget exhausted";
    } else if (any) {
        res.status = SearchStatus::found;
    } else {
        res.reason = "search tree exhausted";
    }
    return res;
}

/// First nice partition in search order, or a certified "none". With several
/// threads the subtrees below the first branching levels are shared out and
/// the earliest one in search order that holds a solution wins, so the answer
/// does not depend on scheduling.
inline NiceSearchResult find_nice(const IntersectionLattice& lat, const NiceSearchOptions& opt = {})
{
    const unsigned threads = opt.threads != 0 ? opt.threads : thread_count_from_env();
    if (threads <= 1 || lat.arrangement().empty()) {
        return enumerate_nice(lat, [](const Partition&) { return false; }, opt.node_limit);
    }
    NiceSearchResult res;
    auto sizes = forced_block_sizes(lat);
    if (!sizes) {
        res.reason = "characteristic polynomial does not split into integer linear factors";
        return res;
    }
    res.block_sizes = *sizes;
    detail::NiceSolver solver(lat, *sizes);
    detail::SearchControl ctl;
    ctl.node_limit = opt.node_limit;

    // frontier of subproblems in search order
    std::vector<detail::NiceSolver::State> frontier;
    if (auto root = solver.root()) {
        frontier.push_back(std::move(*root));
    }
    while (!frontier.empty() && frontier.size() < 8 * threads) {
        std::vector<detail::NiceSolver::State> next;
        bool grew = false;
        for (auto& st : frontier) {
            if (st.unassigned == 0) {
                next.push_back(std::move(st));
                continue;
            }
            ctl.tick();
            const auto h = solver.pick(st);
            for (auto b : solver.values(st, h)) {
                if (auto child = solver.branch(st, h, b)) {
                    next.push_back(std::move(*child));
                }
            }
            grew = true;
        }
        frontier = std::move(next);
        if (!grew) {
            break;
        }
    }

    std::atomic<std::size_t> next_task{0};
    std::atomic<std::size_t> best{frontier.size()};
    std::mutex mu;
    std::optional<Partition> found;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next_task.fetch_add(1);
            if (i >= frontier.size() || i > best.load()) {
                return;
            }
            std::optional<Partition> local;
            detail::nice_dfs(
                solver, frontier[i], ctl,
                [&](const detail::NiceSolver::State& st) {
                    local = solver.to_partition(st);
                    return false;
                },
                [&] { return best.load() < i; });
            if (local) {
                std::lock_guard lock(mu);
                if (i < best.load()) {
                    best.store(i);
                    found = std::move(local);
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    res.nodes = ctl.nodes.load();
    if (found) {
        if (!is_nice(lat, *found)) {
            throw std::logic_error("find_nice: solver produced a partition that is not nice");
        }
        res.status = SearchStatus::found;
        res.partition = std::move(found);
    } else if (ctl.out_of_budget.load()) {
        res.status = SearchStatus::budget_exceeded;
        res.reason = "node budget exhausted";
    } else {
        res.reason = "search tree exhausted";
    }
    return res;
}

inline NiceSearchResult find_nice(const Arrangement& a, const NiceSearchOptions& opt = {})
{
    return find_nice(build_lattice(a), opt);
}

} // namespace arrfactor
