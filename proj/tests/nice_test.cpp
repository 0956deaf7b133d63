#include "arrfactor/catalog.hpp"
#include "arrfactor/nice.hpp"
#include "arrfactor/supersolvable.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace arrfactor;

namespace {

// Niceness decided from matrix ranks of hyperplane subsets only.
class BruteForce {
public:
    explicit BruteForce(const Arrangement& a) : n_(a.size()), rank_(std::size_t{1} << a.size())
    {
        for (std::uint32_t m = 0; m < rank_.size(); ++m) {
            rank_[m] = rank_of_subset(a, to_set(m));
        }
        for (std::uint32_t m = 1; m < rank_.size(); ++m) {
            bool closed = true;
            for (std::size_t h = 0; h < n_ && closed; ++h) {
                closed = ((m >> h) & 1U) || rank_[m | (1U << h)] > rank_[m];
            }
            if (closed && rank_[m] >= 2) {
                flats_.push_back(m);
            }
        }
    }

    bool nice(const std::vector<std::uint32_t>& blocks) const
    {
        // transversals of all blocks; their prefixes cover the smaller block sets
        if (!transversals(blocks, 0, 0, 0)) {
            return false;
        }
        for (auto x : flats_) {
            bool singleton = false;
            for (auto b : blocks) {
                singleton = singleton || std::popcount(b & x) == 1;
            }
            if (!singleton) {
                return false;
            }
        }
        return true;
    }

    // all set partitions, as block masks
    void partitions(const std::function<void(const std::vector<std::uint32_t>&)>& visit) const
    {
        std::vector<std::uint32_t> blocks;
        std::function<void(std::size_t)> rec = [&](std::size_t h) {
            if (h == n_) {
                visit(blocks);
                return;
            }
            // by index: the recursion grows `blocks`
            for (std::size_t k = 0; k < blocks.size(); ++k) {
                blocks[k] |= 1U << h;
                rec(h + 1);
                blocks[k] &= ~(1U << h);
            }
            blocks.push_back(1U << h);
            rec(h + 1);
            blocks.pop_back();
        };
        rec(0);
    }

private:
    bool transversals(const std::vector<std::uint32_t>& blocks, std::size_t k, std::uint32_t picked,
                      std::size_t count) const
    {
        if (rank_[picked] != count) {
            return false;
        }
        if (k == blocks.size()) {
            return true;
        }
        for (std::size_t h = 0; h < n_; ++h) {
            if (((blocks[k] >> h) & 1U) && !transversals(blocks, k + 1, picked | (1U << h), count + 1)) {
                return false;
            }
        }
        return true;
    }

    BitSet to_set(std::uint32_t m) const
    {
        BitSet s(n_);
        for (std::size_t h = 0; h < n_; ++h) {
            if ((m >> h) & 1U) {
                s.set(h);
            }
        }
        return s;
    }

    std::size_t n_;
    std::vector<std::size_t> rank_;
    std::vector<std::uint32_t> flats_;
};

using BlockSet = std::set<std::set<std::size_t>>;

BlockSet as_set(const Partition& pi)
{
    BlockSet out;
    for (const auto& b : pi.blocks()) {
        out.emplace(b.begin(), b.end());
    }
    return out;
}

BlockSet as_set(const std::vector<std::uint32_t>& masks)
{
    BlockSet out;
    for (auto m : masks) {
        std::set<std::size_t> b;
        for (std::size_t h = 0; h < 32; ++h) {
            if ((m >> h) & 1U) {
                b.insert(h);
            }
        }
        out.insert(b);
    }
    return out;
}

Partition explicit_grr3(unsigned r)
{
    std::vector<std::vector<std::size_t>> blocks(3);
    blocks[0] = {0};
    for (unsigned i = 1; i < r; ++i) {
        blocks[1].push_back(i);
    }
    blocks[1].push_back(r);
    blocks[1].push_back(2 * r);
    for (unsigned j = 1; j < r; ++j) {
        blocks[2].push_back(r + j);
        blocks[2].push_back(2 * r + j);
    }
    return Partition(3 * r, blocks);
}

// block count = rank, sizes = exponents, and A_X meets exactly r(X) blocks
void expect_factorization_invariants(const IntersectionLattice& lat, const Partition& pi, const std::string& what)
{
    EXPECT_EQ(pi.num_blocks(), lat.rank()) << what;
    std::vector<long> sizes;
    for (auto s : pi.block_sizes()) {
        sizes.push_back(static_cast<long>(s));
    }
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(integer_root_multiset(char_poly(lat)), sizes) << what;
    for (FlatId x = 0; x < lat.size(); ++x) {
        EXPECT_EQ(induced_partition(lat, pi, x).partition.num_blocks(), lat.flat(x).rank) << what;
    }
}

} // namespace

TEST(Nice, EnumerationAgreesWithBruteForce)
{
    for (std::string name : {"boolean:3", "braid:3", "B:3", "G(3,3,3)", "G(3,1,2)", "braid:2"}) {
        const auto a = from_catalog(name);
        ASSERT_LE(a.size(), 9u);
        const auto lat = build_lattice(a);
        const BruteForce oracle(a);
        std::set<BlockSet> expected;
        oracle.partitions([&](const std::vector<std::uint32_t>& blocks) {
            if (oracle.nice(blocks)) {
                expected.insert(as_set(blocks));
            }
        });
        std::set<BlockSet> found;
        std::size_t visits = 0;
        enumerate_nice(lat, [&](const Partition& pi) {
            found.insert(as_set(pi));
            ++visits;
            return true;
        });
        EXPECT_EQ(found, expected) << name;
        EXPECT_EQ(visits, found.size()) << name << ": some partition was visited twice";
        EXPECT_FALSE(expected.empty()) << name;
    }
}

TEST(Nice, CheckerAgreesWithBruteForce)
{
    const auto a = from_catalog("G(3,3,3)");
    const auto lat = build_lattice(a);
    const BruteForce oracle(a);
    std::size_t checked = 0;
    oracle.partitions([&](const std::vector<std::uint32_t>& blocks) {
        if (++checked % 7 != 0) {
            return;
        }
        std::vector<std::vector<std::size_t>> bs;
        for (const auto& b : as_set(blocks)) {
            bs.emplace_back(b.begin(), b.end());
        }
        const Partition pi(a.size(), bs);
        EXPECT_EQ(is_nice(lat, pi), oracle.nice(blocks)) << pi.to_string();
    });
}

TEST(Nice, MonomialRank3ExplicitPartition)
{
    for (unsigned r : {3u, 4u, 5u, 6u}) {
        const auto lat = build_lattice(monomial(r, r, 3));
        const auto pi = explicit_grr3(r);
        EXPECT_TRUE(is_nice(lat, pi)) << r;
        expect_factorization_invariants(lat, pi, "G(r,r,3) explicit");
        const auto found = find_nice(lat);
        ASSERT_EQ(found.status, SearchStatus::found);
        expect_factorization_invariants(lat, *found.partition, "G(r,r,3) found");
    }
}

TEST(Nice, NonNiceMembers)
{
    for (std::string name : {"G(2,2,4)", "G(3,3,4)", "H3", "G25", "D:4"}) {
        const auto r = find_nice(build_lattice(from_catalog(name)));
        EXPECT_EQ(r.status, SearchStatus::none) << name;
        EXPECT_FALSE(r.partition.has_value());
        EXPECT_EQ(r.reason, "search tree exhausted");
    }
}

TEST(Nice, NonSplittingPolynomialIsRejectedWithoutSearch)
{
    // five generic planes: pi = (1 + t)(1 + 4t + 6t^2)
    const auto& f = CycField::get(1);
    auto v = [&](long a, long b, long c) { return CycVector{CycNum(f, a), CycNum(f, b), CycNum(f, c)}; };
    const auto a = Arrangement::from_normals(3, f, {v(1, 0, 0), v(0, 1, 0), v(0, 0, 1), v(1, 1, 1), v(1, 2, 3)});
    const auto r = find_nice(a);
    EXPECT_EQ(r.status, SearchStatus::none);
    EXPECT_EQ(r.nodes, 0u);
    EXPECT_TRUE(r.block_sizes.empty());
}

TEST(Nice, BudgetIsHonoured)
{
    const auto r = find_nice(build_lattice(monomial(3, 3, 4)), NiceSearchOptions{2, 1});
    EXPECT_EQ(r.status, SearchStatus::budget_exceeded);
    EXPECT_EQ(r.reason, "node budget exhausted");
}

TEST(Nice, DeterministicAcrossRunsAndThreads)
{
    for (std::string name : {"G(4,4,3)", "G(4,2,3)", "B:4", "G(3,3,4)"}) {
        const auto lat = build_lattice(from_catalog(name));
        const auto one = find_nice(lat, NiceSearchOptions{0, 1});
        const auto again = find_nice(lat, NiceSearchOptions{0, 1});
        const auto many = find_nice(lat, NiceSearchOptions{0, 4});
        EXPECT_EQ(one.status, again.status);
        EXPECT_EQ(one.status, many.status) << name;
        EXPECT_EQ(one.partition, again.partition);
        EXPECT_EQ(one.partition, many.partition) << name;
    }
}

TEST(Nice, FirstFoundIsFirstEnumerated)
{
    const auto lat = build_lattice(monomial(3, 3, 3));
    std::optional<Partition> first;
    enumerate_nice(lat, [&](const Partition& pi) {
        first = pi;
        return false;
    });
    EXPECT_EQ(first, find_nice(lat).partition);
}

TEST(Nice, LocalizationsOfNicePartitionsAreNice)
{
    for (std::string name : {"G(3,3,3)", "B:4", "G(4,2,3)"}) {
        const auto lat = build_lattice(from_catalog(name));
        const auto found = find_nice(lat);
        ASSERT_EQ(found.status, SearchStatus::found) << name;
        for (FlatId x = 1; x < lat.size(); ++x) {
            // A_X lists the support in increasing order, as the trace does
            const auto trace = induced_partition(lat, *found.partition, x);
            EXPECT_TRUE(is_nice(localization(lat, x), trace.partition)) << name;
        }
    }
}

TEST(Nice, CheckerRejectsBadPartitions)
{
    const auto lat = build_lattice(monomial(3, 3, 3));
    // wrong number of hyperplanes
    EXPECT_THROW(is_nice(lat, Partition(8, {{0}, {1, 2, 3}, {4, 5, 6, 7}})), std::invalid_argument);
    std::vector<std::size_t> all(9);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_FALSE(is_nice(lat, Partition(9, {all})));
    // four blocks exceed the rank
    EXPECT_FALSE(is_independent(lat, Partition(9, {{0}, {1}, {2}, {3, 4, 5, 6, 7, 8}})));
}

TEST(Supersolvable, SpotChecks)
{
    for (std::string yes : {"braid:3", "B:3", "G(4,2,3)", "boolean:3", "B:4", "G(3,1,3)"}) {
        EXPECT_TRUE(is_supersolvable(build_lattice(from_catalog(yes)))) << yes;
    }
    for (std::string no : {"G(3,3,3)", "D:4", "H3", "G(4,4,3)", "G25"}) {
        EXPECT_FALSE(is_supersolvable(build_lattice(from_catalog(no)))) << no;
    }
}

TEST(Supersolvable, ChainGivesNicePartition)
{
    for (const auto& e : catalog_entries()) {
        if (e.hyperplanes > 24) {
            continue;
        }
        const auto lat = build_lattice(from_catalog(e.name));
        const auto chain = modular_chain(lat);
        if (!chain) {
            continue;
        }
        ASSERT_EQ(chain->size(), lat.rank() + 1);
        for (std::size_t i = 0; i < chain->size(); ++i) {
            EXPECT_EQ(lat.flat((*chain)[i]).rank, i);
            EXPECT_TRUE(is_modular(lat, (*chain)[i]));
        }
        const auto pi = supersolvable_to_nice(lat, *chain);
        EXPECT_TRUE(is_nice(lat, pi)) << e.name;
        expect_factorization_invariants(lat, pi, e.name);
    }
}

TEST(Supersolvable, BottomAndTopAreModular)
{
    const auto lat = build_lattice(from_catalog("H3"));
    EXPECT_TRUE(is_modular(lat, lat.bottom()));
    EXPECT_TRUE(is_modular(lat, lat.top()));
    for (auto x : lat.stratum(1)) {
        EXPECT_TRUE(is_modular(lat, x));
    }
}

TEST(Supersolvable, InvalidChainsAreRejected)
{
    const auto lat = build_lattice(from_catalog("B:3"));
    auto chain = *modular_chain(lat);
    auto short_chain = chain;
    short_chain.pop_back();
    EXPECT_THROW(supersolvable_to_nice(lat, short_chain), std::invalid_argument);
    auto swapped = chain;
    std::swap(swapped[1], swapped[2]);
    EXPECT_THROW(supersolvable_to_nice(lat, swapped), std::invalid_argument);
}
