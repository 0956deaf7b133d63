#pragma once

#include "arrfactor/arrfactor.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

namespace arrfactor::checks {

struct CheckOutcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    std::string id;
    std::string title;
    std::function<CheckOutcome()> run;
};

using Support = std::vector<std::size_t>;

/// 1-based hyperplane numbers, as hyperplanes are usually numbered by hand.
inline BitSet one_based(std::size_t n, const Support& s)
{
    BitSet b(n);
    for (auto i : s) {
        b.set(i - 1);
    }
    return b;
}

inline std::string show(const Support& s)
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        out += (k == 0 ? "H" : ",H") + std::to_string(s[k]);
    }
    return out + "}";
}

/// Every listed support (1-based) must be exactly the support of a flat.
inline CheckOutcome flats_present(const IntersectionLattice& lat, const std::vector<Support>& listed)
{
    CheckOutcome out;
    for (const auto& s : listed) {
        if (!lat.find(one_based(lat.arrangement().size(), s))) {
            out.pass = false;
            out.detail += " missing flat " + show(s) + ";";
        }
    }
    if (out.pass) {
        out.detail = std::to_string(listed.size()) + " listed flats reproduced;";
    }
    return out;
}

/// For every h2 in `others`, some h in `group` has A_{H n H2} = {H, H2}.
inline CheckOutcome size_two_flats_exist(const IntersectionLattice& lat, const Support& group, const Support& others)
{
    CheckOutcome out;
    for (auto h2 : others) {
        bool found = false;
        for (auto h : group) {
            if (h != h2 && lat.find(one_based(lat.arrangement().size(), {h, h2}))) {
                found = true;
                break;
            }
        }
        if (!found) {
            out.pass = false;
            out.detail += " no size-2 flat through H" + std::to_string(h2) + " and " + show(group) + ";";
        }
    }
    if (out.pass) {
        out.detail = "size-2 flats through " + show(group) + " present;";
    }
    return out;
}

inline std::string sizes_string(const std::vector<long>& v)
{
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) {
        s += (k == 0 ? "" : ",") + std::to_string(v[k]);
    }
    return s + "}";
}

inline CheckOutcome expect_not_nice(const IntersectionLattice& lat, const std::string& name,
                                    const std::vector<long>& roots)
{
    CheckOutcome out;
    auto sizes = forced_block_sizes(lat);
    if (!sizes || *sizes != roots) {
        out.pass = false;
        out.detail += " " + name + ": exponents " + (sizes ? sizes_string(*sizes) : "none") + ", expected "
            + sizes_string(roots) + ";";
    }
    auto r = find_nice(lat);
    if (r.status != SearchStatus::none) {
        out.pass = false;
        out.detail += std::string(" ") + name + ": search " + to_string(r.status) + ";";
    } else {
        out.detail += " " + name + " not nice (" + std::to_string(r.nodes) + " nodes);";
    }
    return out;
}

inline std::string to_lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline CheckOutcome merge(CheckOutcome a, const CheckOutcome& b)
{
    a.pass = a.pass && b.pass;
    a.detail += " " + b.detail;
    return a;
}

struct ListedFlats {
    std::string arrangement;
    std::vector<Support> supports;
};

/// Flats of the exceptional arrangements quoted by hyperplane number (1-based).
inline const std::vector<ListedFlats>& listed_flats()
{
    static const std::vector<ListedFlats> table{
        {"H3", {{1, 3}, {1, 15}, {3, 15}, {2, 8}, {2, 13}, {8, 13}}},
        {"G25", {{4, 9}, {4, 11}, {9, 11}, {5, 7}, {5, 12}, {7, 12}}},
        {"G24", {{1, 6, 11, 15}, {1, 7, 12, 17}, {1, 8, 10, 13}, {1, 9, 14, 18}, {1, 2, 4}, {1, 3, 5}, {1, 16, 20}, {1, 19, 21}, {6, 9, 10}, {6, 14, 17}, {7, 8, 15}, {7, 13, 18}}},
        {"G26", {{3, 5}, {5, 14}, {5, 19}, {5, 21}, {3, 14, 19, 21}}},
        {"G27", {{1, 2, 3, 4, 5}, {1, 6, 7, 8, 9}, {1, 10, 11, 12, 13}, {1, 14, 15, 16, 17}, {4, 6, 18}, {3, 9, 19}, {2, 7, 20}, {5, 8, 21}, {3, 7, 22}, {5, 6, 23}, {19, 23, 24}, {18, 22, 25}, {21, 22, 26}, {20, 23, 27}, {24, 25, 26, 27}, {11, 17, 18}, {11, 16, 20}, {10, 16, 21}, {10, 17, 19}, {12, 15, 22}, {13, 15, 23}, {4, 12, 25}, {8, 14, 25}, {3, 15, 24}, {9, 13, 24}}},
        {"F4", {{1, 2, 5}, {1, 6, 8, 14}, {1, 10, 12, 20}, {1, 13, 15, 22}, {2, 8}, {2, 12}, {2, 13}, {6, 20}, {6, 22}, {10, 22}}},
        {"G29", {{1, 6, 17, 21}, {1, 22, 26, 38}, {1, 13, 19, 30}, {6, 38}, {6, 30}, {13, 38}, {1, 2, 3, 5, 6, 8, 10, 17, 21}, {1, 6, 17, 21, 31, 32, 33, 36, 40}, {1, 7, 9, 12, 13, 14, 15, 19, 30}, {1, 13, 19, 23, 28, 29, 30, 34, 39}, {2, 12}, {2, 28}, {3, 31}, {7, 32}, {7, 39}, {23, 36}}},
        {"G31", {{1, 2, 3, 6, 7, 9}, {1, 11, 13, 21, 22, 23}, {1, 39, 43, 53, 56, 59}, {2, 23}, {2, 59}, {11, 59}, {3, 4}, {4, 13}, {4, 56}}},
    };
    return table;
}

/// For every H' in `others`, some H in `group` with A_{H n H'} = {H, H'}.
struct PairCondition {
    Support group;
    Support others;
};

inline const std::vector<PairCondition>& g29_pair_conditions()
{
    static const std::vector<PairCondition> table{
        {{6, 17, 21}, {2, 3, 5, 8, 10, 13, 19, 22, 26, 30, 31, 32, 33, 36, 38, 40}},
        {{13, 19, 30}, {6, 7, 9, 12, 14, 15, 17, 21, 22, 23, 26, 28, 29, 34, 38, 39}},
    };
    return table;
}

/// Transcription of `name` against its listed flats.
inline CheckOutcome transcription(const IntersectionLattice& lat, const std::string& name)
{
    CheckOutcome out{true, ""};
    for (const auto& l : listed_flats()) {
        if (l.arrangement == name) {
            out = flats_present(lat, l.supports);
        }
    }
    if (name == "G29") {
        for (const auto& c : g29_pair_conditions()) {
            out = merge(out, size_two_flats_exist(lat, c.group, c.others));
        }
    }
    return out;
}

inline Check exceptional_check(const std::string& name, std::vector<long> exponents)
{
    return {to_lower(name), name + " is not nice", [name, exponents] {
                const auto lat = build_lattice(exceptional(name));
                return merge(transcription(lat, name), expect_not_nice(lat, name, exponents));
            }};
}

/// G(r,r,3): nice with sizes {1, r+1, 2(r-1)}, the partition
/// ({A_0}, {A_1..A_{r-1}, B_0, C_0}, rest) is nice, and the rank-2 flats are
/// the three families plus {A_i, B_j, C_{j-i}}.
inline CheckOutcome monomial_rank3(unsigned r)
{
    CheckOutcome out;
    const auto lat = build_lattice(monomial(r, r, 3));
    const std::vector<long> want{1, static_cast<long>(r) + 1, 2 * (static_cast<long>(r) - 1)};
    std::vector<long> want_sorted = want;
    std::sort(want_sorted.begin(), want_sorted.end());

    auto found = find_nice(lat);
    if (found.status != SearchStatus::found) {
        return {false, "G(" + std::to_string(r) + "," + std::to_string(r) + ",3): no nice partition found"};
    }
    std::vector<long> got;
    for (auto s : found.partition->block_sizes()) {
        got.push_back(static_cast<long>(s));
    }
    std::sort(got.begin(), got.end());
    if (got != want_sorted) {
        out.pass = false;
        out.detail += " block sizes " + sizes_string(got) + ";";
    }

    auto a = [](unsigned i) { return i; };
    auto b = [r](unsigned j) { return r + j; };
    auto c = [r](unsigned k) { return 2 * r + k; };
    std::vector<std::vector<std::size_t>> blocks(3);
    blocks[0] = {a(0)};
    for (unsigned i = 1; i < r; ++i) {
        blocks[1].push_back(a(i));
    }
    blocks[1].push_back(b(0));
    blocks[1].push_back(c(0));
    for (unsigned j = 1; j < r; ++j) {
        blocks[2].push_back(b(j));
        blocks[2].push_back(c(j));
    }
    const Partition explicit_pi(3 * r, blocks);
    if (!is_nice(lat, explicit_pi)) {
        out.pass = false;
        out.detail += " explicit partition not nice;";
    }

    std::vector<BitSet> expected;
    for (unsigned fam = 0; fam < 3; ++fam) {
        BitSet s(3 * r);
        for (unsigned i = 0; i < r; ++i) {
            s.set(fam * r + i);
        }
        expected.push_back(s);
    }
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = 0; j < r; ++j) {
            expected.push_back(BitSet::from_indices(3 * r, {a(i), b(j), c((j + r - i) % r)}));
        }
    }
    if (lat.stratum_size(2) != expected.size()) {
        out.pass = false;
        out.detail += " rank-2 stratum has " + std::to_string(lat.stratum_size(2)) + " flats;";
    }
    for (const auto& s : expected) {
        if (!lat.find(s)) {
            out.pass = false;
            out.detail += " missing rank-2 flat;";
        }
    }
    if (out.pass) {
        out.detail = "G(" + std::to_string(r) + "," + std::to_string(r) + ",3) nice, sizes " + sizes_string(got)
            + ", partition " + explicit_pi.to_string() + ", rank-2 flats match;";
    }
    return out;
}

inline std::vector<Check> all_checks()
{
    std::vector<Check> v;
    v.push_back({"grr3", "G(r,r,3) is nice for r = 3, 4, 5", [] {
                     CheckOutcome out{true, ""};
                     for (unsigned r : {3u, 4u, 5u}) {
                         out = merge(out, monomial_rank3(r));
                     }
                     return out;
                 }});
    v.push_back({"grr4", "G(2,2,4) and G(3,3,4) are not nice", [] {
                     CheckOutcome out{true, ""};
                     out = merge(out, expect_not_nice(build_lattice(monomial(2, 2, 4)), "G(2,2,4)", {1, 3, 3, 5}));
                     out = merge(out, expect_not_nice(build_lattice(monomial(3, 3, 4)), "G(3,3,4)", {1, 4, 6, 7}));
                     return out;
                 }});
    v.push_back({"parabolic", "a non-nice localization rules out the whole arrangement (D4 inside D5)", [] {
                     CheckOutcome out{true, ""};
                     const auto lat = build_lattice(monomial(2, 2, 5));
                     // localization at x1 = x2 = x3 = x4 = 0 is D4 in the first four coordinates
                     std::optional<FlatId> d4;
                     for (auto x : lat.stratum(4)) {
                         if (lat.flat(x).support.count() == 12) {
                             d4 = x;
                             break;
                         }
                     }
                     if (!d4) {
                         return CheckOutcome{false, "no rank-4 flat of size 12 in D5"};
                     }
                     const auto loc = build_lattice(localization(lat, *d4));
                     if (char_poly(loc) != char_poly(build_lattice(monomial(2, 2, 4)))) {
                         return CheckOutcome{false, "localization is not of type D4"};
                     }
                     out = merge(out, expect_not_nice(loc, "D4 localization", {1, 3, 3, 5}));
                     out = merge(out, expect_not_nice(lat, "D5", {1, 3, 4, 5, 7}));
                     return out;
                 }});
    v.push_back(exceptional_check("H3", {1, 5, 9}));
    v.push_back(exceptional_check("G25", {1, 4, 7}));
    v.push_back(exceptional_check("G24", {1, 9, 11}));
    v.push_back(exceptional_check("G26", {1, 7, 13}));
    v.push_back(exceptional_check("G27", {1, 19, 25}));
    v.push_back(exceptional_check("F4", {1, 5, 7, 11}));
    v.push_back(exceptional_check("G29", {1, 9, 13, 17}));
    v.push_back(exceptional_check("G31", {1, 13, 17, 29}));
    v.push_back({"summary", "irreducible members: nice iff supersolvable or G(r,r,3)", [] {
                     CheckOutcome out{true, ""};
                     struct Row {
                         std::string name;
                         bool grr3;
                     };
                     const std::vector<Row> rows{
                         {"braid:3", false}, {"B:3", false},  {"G(4,2,3)", false}, {"G(3,3,3)", true},
                         {"G(4,4,3)", true}, {"G(5,5,3)", true}, {"G(2,2,4)", false}, {"G(3,3,4)", false},
                         {"H3", false},      {"G24", false},  {"G25", false},      {"G26", false},
                         {"G27", false},     {"F4", false},   {"G29", false},      {"G31", false},
                     };
                     for (const auto& row : rows) {
                         const auto lat = build_lattice(from_catalog(row.name));
                         const bool ss = is_supersolvable(lat);
                         const bool nice = find_nice(lat).status == SearchStatus::found;
                         const bool ok = nice == (ss || row.grr3);
                         out.pass = out.pass && ok;
                         out.detail += " " + row.name + "[ss=" + (ss ? "y" : "n") + " nice=" + (nice ? "y" : "n")
                             + (ok ? "" : " MISMATCH") + "]";
                     }
                     return out;
                 }});
    v.push_back({"indfactored", "rank-3 members: inductively factored iff supersolvable", [] {
                     CheckOutcome out{true, ""};
                     for (std::string name : {"boolean:3", "braid:3", "B:3", "G(4,2,3)", "G(3,3,3)", "H3", "G25"}) {
                         const auto a = from_catalog(name);
                         const bool ss = is_supersolvable(build_lattice(a));
                         const auto r = is_inductively_factored(a, 200000);
                         const bool ok = r.answer == (ss ? Answer::yes : Answer::no);
                         out.pass = out.pass && ok;
                         out.detail += " " + name + "[ss=" + (ss ? "y" : "n") + " ifac=" + to_string(r.answer)
                             + (ok ? "" : " MISMATCH") + "]";
                     }
                     return out;
                 }});
    v.push_back({"hereditary", "G(3,3,3) and G(4,4,3) are hereditarily factored", [] {
                     CheckOutcome out{true, ""};
                     for (unsigned r : {3u, 4u}) {
                         const auto lat = build_lattice(monomial(r, r, 3));
                         const auto direct = is_hereditarily_factored(lat, HereditaryMode::direct);
                         const auto quick = is_hereditarily_factored(lat, HereditaryMode::rank3_shortcut);
                         const bool ok = direct.answer == Answer::yes && quick.answer == Answer::yes
                             && direct.entries.size() == lat.size();
                         out.pass = out.pass && ok;
                         out.detail += " G(" + std::to_string(r) + "," + std::to_string(r) + ",3): "
                             + std::to_string(direct.entries.size()) + " restrictions nice;";
                     }
                     return out;
                 }});
    return v;
}

} // namespace arrfactor::checks
