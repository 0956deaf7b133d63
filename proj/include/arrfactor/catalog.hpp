#pragma once

#include "arrfactor/arrangement.hpp"
#include "arrfactor/catalog_data.hpp"
#include "arrfactor/linear_form.hpp"

#include <cstddef>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrfactor {

/// Arrangement of G(r,p,l): ker(x_i - zeta^k x_j) for i < j and 0 <= k < r,
/// listed by pair (0,1),(0,2),...,(1,2),... then by k, preceded by the
/// coordinate hyperplanes when p != r. Over conductor r.
inline Arrangement monomial(unsigned r, unsigned p, std::size_t l)
{
    if (r == 0 || p == 0 || l == 0) {
        throw std::invalid_argument("monomial: r, p and l must be positive");
    }
    if (r % p != 0) {
        throw std::invalid_argument("monomial: p = " + std::to_string(p) + " does not divide r = " + std::to_string(r));
    }
    const CycField& field = CycField::get(r);
    std::vector<CycVector> normals;
    if (p != r) {
        for (std::size_t i = 0; i < l; ++i) {
            CycVector v(l, CycNum(field));
            v[i] = CycNum(field, 1);
            normals.push_back(std::move(v));
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
            for (unsigned k = 0; k < r; ++k) {
                CycVector v(l, CycNum(field));
                v[i] = CycNum(field, 1);
                v[j] = -CycNum::zeta_pow(field, k);
                normals.push_back(std::move(v));
            }
        }
    }
    return Arrangement::from_normals(l, field, normals);
}

/// Coordinate hyperplanes of an n-space.
inline Arrangement boolean_arrangement(std::size_t n)
{
    const CycField& field = CycField::get(1);
    std::vector<CycVector> normals;
    for (std::size_t i = 0; i < n; ++i) {
        CycVector v(n, CycNum(field));
        v[i] = CycNum(field, 1);
        normals.push_back(std::move(v));
    }
    return Arrangement::from_normals(n, field, normals);
}

/// A_n: ker(x_i - x_j) in n+1 coordinates.
inline Arrangement braid(std::size_t n) { return monomial(1, 1, n + 1); }

/// Arrangement listed in catalog_data, hyperplanes in listing order.
inline Arrangement from_listing(const catalog_data::Listing& entry)
{
    const CycField& field = CycField::get(entry.conductor);
    LinearFormParser parser(field, std::string(entry.variables));
    std::vector<CycVector> normals;
    for (std::size_t k = 0; k < entry.count; ++k) {
        normals.push_back(parser.parse(entry.forms[k]));
    }
    return Arrangement::from_normals(entry.dim, field, normals);
}

/// H3, G24, G25, G26, G27, F4, G29 or G31.
inline Arrangement exceptional(const std::string& name)
{
    for (const auto& entry : catalog_data::listings) {
        if (entry.name == name) {
            return from_listing(entry);
        }
    }
    throw std::invalid_argument("exceptional: unknown arrangement '" + name + "'");
}

/// Coxeter arrangements: A, B, D by rank, F4 and H3 from their listings.
inline Arrangement coxeter(char type, std::size_t rank)
{
    switch (type) {
    case 'A':
        return braid(rank);
    case 'B':
        return monomial(2, 1, rank);
    case 'D':
        return monomial(2, 2, rank);
    case 'F':
        if (rank == 4) {
            return exceptional("F4");
        }
        break;
    case 'H':
        if (rank == 3) {
            return exceptional("H3");
        }
        break;
    default:
        break;
    }
    throw std::invalid_argument(std::string("coxeter: unsupported type ") + type + std::to_string(rank));
}

struct CatalogEntry {
    std::string name;
    std::size_t hyperplanes;
    std::size_t rank;
    unsigned conductor;
};

/// Named members with their expected size, rank and conductor.
inline std::vector<CatalogEntry> catalog_entries()
{
    return {
        {"G(3,3,3)", 9, 3, 3},  {"G(4,4,3)", 12, 3, 4}, {"G(5,5,3)", 15, 3, 5}, {"G(4,2,3)", 15, 3, 4},
        {"G(2,2,4)", 12, 4, 2}, {"G(3,3,4)", 18, 4, 3}, {"braid:3", 6, 3, 1},   {"B:3", 9, 3, 2},
        {"D:4", 12, 4, 2},      {"boolean:3", 3, 3, 1}, {"H3", 15, 3, 5},       {"G24", 21, 3, 7},
        {"G25", 12, 3, 3},      {"G26", 21, 3, 3},      {"G27", 45, 3, 15},     {"F4", 24, 4, 1},
        {"G29", 40, 4, 4},      {"G31", 60, 4, 4},
    };
}

/// Resolve a catalog name: G(r,p,l), boolean:n, braid:n, B:n, D:n, F4, H3,
/// G24, ..., G31.
inline Arrangement from_catalog(const std::string& name)
{
    static const std::regex monomial_re(R"(G\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
    static const std::regex family_re(R"((boolean|braid|B|D):(\d+))");
    std::smatch m;
    if (std::regex_match(name, m, monomial_re)) {
        return monomial(static_cast<unsigned>(std::stoul(m[1])), static_cast<unsigned>(std::stoul(m[2])),
                        std::stoul(m[3]));
    }
    if (std::regex_match(name, m, family_re)) {
        const std::size_t n = std::stoul(m[2]);
        if (n == 0) {
            throw std::invalid_argument("catalog: rank must be positive in '" + name + "'");
        }
        const std::string fam = m[1];
        if (fam == "boolean") {
            return boolean_arrangement(n);
        }
        if (fam == "braid") {
            return braid(n);
        }
        return coxeter(fam[0], n);
    }
    return exceptional(name);
}

} // namespace arrfactor
