#pragma once

#include <cstddef>
#include <iterator>
#include <string_view>

namespace arrfactor::catalog_data {

/// Defining linear forms of the exceptional arrangements, one per hyperplane,
/// in the order the factors of the defining polynomial are usually printed.
/// `zeta` is the class of x modulo the cyclotomic polynomial, `i` is zeta^(n/4).
struct Listing {
    std::string_view name;
    unsigned dim;
    unsigned conductor;
    std::string_view variables;
    const std::string_view* forms;
    std::size_t count;
};

inline constexpr std::string_view h3_forms[] = {
    "x",
    "y",
    "z",
    "x + y",
    "y + z",
    "x - (zeta^3 + zeta^2) y",
    "x - (zeta^3 + zeta^2 + 1) y",
    "x - (zeta^3 + zeta^2) y - (zeta^3 + zeta^2) z",
    "x - (zeta^3 + zeta^2 + 1) y - (zeta^3 + zeta^2 + 1) z",
    "x + y + z",
    "x - (zeta^3 + zeta^2) y - (zeta^3 + zeta^2 + 1) z",
    "x - (zeta^3 + zeta^2) y + z",
    "x + y + (zeta^3 + zeta^2 + 2) z",
    "x + y - (zeta^3 + zeta^2 + 1) z",
    "x - 2 (zeta^3 + zeta^2 + 1) y - (zeta^3 + zeta^2 + 1) z",
};

inline constexpr std::string_view g25_forms[] = {
    "x",
    "y",
    "z",
    "x + y + z",
    "x + y + zeta z",
    "x + y - (zeta + 1) z",
    "x + zeta y + z",
    "x + zeta y + zeta z",
    "x + zeta y - (zeta + 1) z",
    "x - (zeta + 1) y + z",
    "x - (zeta + 1) y + zeta z",
    "x - (zeta + 1) y - (zeta + 1) z",
};

inline constexpr std::string_view g24_forms[] = {
    "x + (2 zeta^4 + 2 zeta^2 + 2 zeta + 1) y",
    "x + (-2 zeta^4 - 2 zeta^2 - 2 zeta - 1) y",
    "3 x + (-zeta^4 - zeta^2 - zeta + 3) y - 2 (zeta^4 + zeta^2 + zeta) z",
    "x",
    "3 x - (zeta^4 + zeta^2 + zeta + 4) y - 2 (zeta^4 + zeta^2 + zeta + 1) z",
    "3 x - 7 y + 4 z",
    "3 x + 7 y - 4 z",
    "3 x + (2 zeta^4 + 2 zeta^2 + 2 zeta + 1) y - 2 (zeta^4 + zeta^2 + zeta - 1) z",
    "7 y + (-3 zeta^4 - 3 zeta^2 - 3 zeta + 2) z",
    "3 x + (-2 zeta^4 - 2 zeta^2 - 2 zeta - 1) y - 4 (zeta^4 + zeta^2 + zeta - 1) z",
    "3 x + (zeta^4 + zeta^2 + zeta + 4) y + 2 (zeta^4 + zeta^2 + zeta + 1) z",
    "3 x + (zeta^4 + zeta^2 + zeta - 3) y + 2 (zeta^4 + zeta^2 + zeta) z",
    "7 y + (3 zeta^4 + 3 zeta^2 + 3 zeta + 5) z",
    "3 x + (2 zeta^4 + 2 zeta^2 + 2 zeta + 1) y - 2 ( zeta^4 + zeta^2 + zeta + 2) z",
    "3 x + (-2 zeta^4 - 2 zeta^2 - 2 zeta - 1) y + 2 ( zeta^4 + zeta^2 + zeta + 2) z",
    "7 y + (-6 zeta^4 - 6 zeta^2 - 6 zeta - 10) z",
    "3 x + (-2 zeta^4 - 2 zeta^2 - 2 zeta - 1) y + 2 ( zeta^4 + zeta^2 + zeta - 1) z",
    "3 x + (-2 zeta^4 - 2 zeta^2 - 2 zeta - 1) y - 4 (zeta^4 + zeta^2 + zeta + 2) z",
    "3 x + (2 zeta^4 + 2 zeta^2 + 2 zeta + 1) y + 4 ( zeta^4 + zeta^2 + zeta + 2) z",
    "3 x + (2 zeta^4 + 2 zeta^2 + 2 zeta + 1) y + 4 ( zeta^4 + zeta^2 + zeta - 1) z",
    "7 y + (6 zeta^4 + 6 zeta^2 + 6 zeta - 4) z",
};

inline constexpr std::string_view g26_forms[] = {
    "x",
    "y",
    "z",
    "x - y",
    "x - zeta y",
    "x - zeta^2 y",
    "x - z",
    "x - zeta z",
    "x - zeta^2 z",
    "y - z",
    "y - zeta z",
    "y - zeta^2 z",
    "x + y + z",
    "x + zeta y + z",
    "x + zeta^2 y + z",
    "x + y + zeta z",
    "x + y + zeta^2 z",
    "x + zeta^2 y + zeta^2 z",
    "x + zeta y + zeta^2 z",
    "x + zeta^2 y + zeta z",
    "x + zeta y + zeta z",
};

inline constexpr std::string_view g27_forms[] = {
    "15 x + (24 zeta^7 - 18 zeta^6 - 6 zeta^5 + 18 zeta^4 - 6 zeta^3 + 12 zeta^2 - 6 zeta - 15) y + (-4 zeta^7 + 8 zeta^6 - 4 zeta^5 + 2 zeta^4 - 4 zeta^3 - 12 zeta^2 + 6 zeta) z",
    "3 y + (zeta^7 + 3 zeta^5 - zeta^4 - zeta^3 + zeta^2 - zeta + 2) z",
    "15 x + (-18 zeta^6 + 6 zeta^5 + 12 zeta^4 - 6 zeta^3 + 12 zeta^2 - 24 zeta - 3) y + (-12 zeta^6 + 4 zeta^5 + 8 zeta^4 - 4 zeta^3 + 8 zeta^2 - 16 zeta - 2) z",
    "15 x + (-12 zeta^7 - 18 zeta^6 + 12 zeta^5 - 6 zeta^4 - 6 zeta^3 + 12 zeta^2 - 18 zeta + 3) y + (2 zeta^7 + 8 zeta^6 - 2 zeta^5 + 6 zeta^4 + 6 zeta^3 - 2 zeta^2 - 2 zeta + 2) z",
    "15 x + (12 zeta^7 - 18 zeta^6 - 6 zeta^3 + 12 zeta^2 - 9) y + (-2 zeta^7 + 28 zeta^6 - 10 zeta^5 + 6 zeta^3 - 22 zeta^2 + 20 zeta + 4) z",
    "15 x + (9 zeta^7 - 12 zeta^6 - 3 zeta^5 + 9 zeta^4 - 9 zeta^3 + 3 zeta^2 - 3 zeta - 9) y + (zeta^7 - 8 zeta^6 + 3 zeta^5 - 4 zeta^4 - zeta^3 + 7 zeta^2 - 2 zeta - 1) z",
    "15 x + (12 zeta^7 - 18 zeta^6 - 6 zeta^3 + 12 zeta^2 - 9) y + (-22 zeta^7 + 8 zeta^6 + 10 zeta^5 + 6 zeta^3 - 2 zeta^2 - 20 zeta + 14) z",
    "15 x + (6 zeta^7 + 6 zeta^6 + 12 zeta^3 + 6 zeta^2 + 3) y + (14 zeta^7 - 16 zeta^6 + 10 zeta^4 - 2 zeta^3 + 14 zeta^2 - 10 zeta - 8) z",
    "15 x + (-3 zeta^7 - 6 zeta^6 + 6 zeta^5 - 3 zeta^4 + 3 zeta^3 + 9 zeta^2 - 9 zeta + 3) y + (3 zeta^7 + 6 zeta^6 - zeta^5 - 2 zeta^4 + 7 zeta^3 + zeta^2 + 4 zeta + 2) z",
    "15 x + (12 zeta^7 + 18 zeta^6 - 12 zeta^5 + 6 zeta^4 + 6 zeta^3 - 12 zeta^2 + 18 zeta - 3) y + (-2 zeta^7 - 8 zeta^6 + 2 zeta^5 - 6 zeta^4 - 6 zeta^3 + 2 zeta^2 + 2 zeta - 2) z",
    "15 x + (30 zeta^7 - 6 zeta^6 - 18 zeta^5 + 24 zeta^4 - 12 zeta^3 - 6 zeta^2 + 12 zeta - 21) y + (20 zeta^7 - 4 zeta^6 - 12 zeta^5 + 16 zeta^4 - 8 zeta^3 - 4 zeta^2 + 8 zeta - 14) z",
    "15 x + (6 zeta^7 + 6 zeta^6 + 12 zeta^3 + 6 zeta^2 + 3) y + (-26 zeta^7 + 4 zeta^6 + 10 zeta^5 - 20 zeta^4 - 2 zeta^3 - 6 zeta^2 + 12) z",
    "3 y + (-2 zeta^7 - 2 zeta^5 - zeta^4 + 2 zeta^3 - 2 zeta^2 - zeta + 1) z",
    "15 x + (3 zeta^7 + 6 zeta^6 - 6 zeta^5 + 3 zeta^4 - 3 zeta^3 - 9 zeta^2 + 9 zeta - 3) y + (-3 zeta^7 - 6 zeta^6 + zeta^5 + 2 zeta^4 - 7 zeta^3 - zeta^2 - 4 zeta - 2) z",
    "x + (2 zeta^6 + 2 zeta^3 + 1) y",
    "15 x + (-12 zeta^7 + 6 zeta^5 - 3 zeta^4 - 9 zeta + 6) y + (-3 zeta^7 - zeta^5 - 2 zeta^4 - 5 zeta^3 - 5 zeta^2 + 4 zeta - 1) z",
    "15 x + (-6 zeta^7 + 6 zeta^6 + 6 zeta^5 - 18 zeta^4 + 12 zeta^3 + 6 zeta^2 + 6 zeta + 9) y + (-14 zeta^7 + 4 zeta^6 + 4 zeta^5 - 2 zeta^4 - 2 zeta^3 - 6 zeta^2 - 6 zeta + 6) z",
    "15 x + (-12 zeta^7 + 18 zeta^6 + 6 zeta^3 - 12 zeta^2 + 9) y + (22 zeta^7 - 8 zeta^6 - 10 zeta^5 - 6 zeta^3 + 2 zeta^2 + 20 zeta - 14) z",
    "15 x + (-6 zeta^7 - 6 zeta^6 - 12 zeta^3 - 6 zeta^2 - 3) y + (-14 zeta^7 + 16 zeta^6 - 10 zeta^4 + 2 zeta^3 - 14 zeta^2 + 10 zeta + 8) z",
    "x + (2 zeta^7 - 2 zeta^6 + 2 zeta^2 - 1) y",
    "x + (-2 zeta^6 - 2 zeta^3 - 1) y",
    "3 y + (-zeta^7 + 2 zeta^5 + zeta^4 + zeta^3 - zeta^2 + zeta + 2) z",
    "15 x + (6 zeta^7 + 6 zeta^6 + 12 zeta^3 + 6 zeta^2 + 3) y + (14 zeta^7 - 16 zeta^6 - 10 zeta^5 + 20 zeta^4 - 22 zeta^3 - 6 zeta^2 - 18) z",
    "15 x + (-6 zeta^7 + 3 zeta^5 - 9 zeta^4 + 3 zeta + 3) y + (11 zeta^7 - 10 zeta^6 - 3 zeta^5 + 4 zeta^4 - 5 zeta^3 + 5 zeta^2 + 2 zeta - 8) z",
    "15 x + (18 zeta^6 - 6 zeta^5 - 12 zeta^4 + 6 zeta^3 - 12 zeta^2 + 24 zeta + 3) y + (12 zeta^6 - 4 zeta^5 - 8 zeta^4 + 4 zeta^3 - 8 zeta^2 + 16 zeta + 2) z",
    "15 x + (-6 zeta^7 - 6 zeta^6 - 12 zeta^3 - 6 zeta^2 - 3) y + (26 zeta^7 - 4 zeta^6 - 10 zeta^5 + 20 zeta^4 + 2 zeta^3 + 6 zeta^2 - 12) z",
    "15 x + (-12 zeta^7 + 18 zeta^6 + 6 zeta^3 - 12 zeta^2 + 9) y + (-18 zeta^7 + 12 zeta^6 + 10 zeta^5 - 10 zeta^4 + 14 zeta^3 + 2 zeta^2 - 10 zeta + 16) z",
    "15 x + (-9 zeta^7 + 12 zeta^6 + 3 zeta^5 - 9 zeta^4 + 9 zeta^3 - 3 zeta^2 + 3 zeta + 9) y + (-zeta^7 + 8 zeta^6 - 3 zeta^5 + 4 zeta^4 + zeta^3 - 7 zeta^2 + 2 zeta + 1) z",
    "x",
    "x + (-2 zeta^7 + 2 zeta^6 - 2 zeta^2 + 1) y",
    "15 x + (-24 zeta^7 + 18 zeta^6 + 6 zeta^5 - 18 zeta^4 + 6 zeta^3 - 12 zeta^2 + 6 zeta + 15) y + (4 zeta^7 - 8 zeta^6 + 4 zeta^5 - 2 zeta^4 + 4 zeta^3 + 12 zeta^2 - 6 zeta) z",
    "15 x + (-18 zeta^7 + 6 zeta^6 + 12 zeta^5 - 6 zeta^4 + 12 zeta^3 + 6 zeta^2 - 18 zeta + 15) y + (8 zeta^7 - 16 zeta^6 - 2 zeta^5 + 6 zeta^4 - 12 zeta^3 + 4 zeta^2 - 2 zeta - 10) z",
    "15 x + (6 zeta^7 - 3 zeta^5 + 9 zeta^4 - 3 zeta - 3) y + (-11 zeta^7 + 10 zeta^6 + 3 zeta^5 - 4 zeta^4 + 5 zeta^3 - 5 zeta^2 - 2 zeta + 8) z",
    "15 x + (18 zeta^7 - 6 zeta^6 - 12 zeta^5 + 6 zeta^4 - 12 zeta^3 - 6 zeta^2 + 18 zeta - 15) y + (-8 zeta^7 + 16 zeta^6 + 2 zeta^5 - 6 zeta^4 + 12 zeta^3 - 4 zeta^2 + 2 zeta + 10) z",
    "15 x + (-6 zeta^7 - 6 zeta^6 - 12 zeta^3 - 6 zeta^2 - 3) y + (-4 zeta^7 - 4 zeta^6 + 10 zeta^4 - 8 zeta^3 - 4 zeta^2 - 10 zeta - 2) z",
    "15 x + (-12 zeta^7 + 18 zeta^6 + 6 zeta^3 - 12 zeta^2 + 9) y + (12 zeta^7 + 12 zeta^6 - 10 zeta^5 + 10 zeta^4 + 4 zeta^3 - 8 zeta^2 + 10 zeta - 4) z",
    "15 x + (-12 zeta^7 + 18 zeta^6 + 6 zeta^3 - 12 zeta^2 + 9) y + (2 zeta^7 - 28 zeta^6 + 10 zeta^5 - 6 zeta^3 + 22 zeta^2 - 20 zeta - 4) z",
    "15 x + (-30 zeta^7 + 6 zeta^6 + 18 zeta^5 - 24 zeta^4 + 12 zeta^3 + 6 zeta^2 - 12 zeta + 21) y + (-20 zeta^7 + 4 zeta^6 + 12 zeta^5 - 16 zeta^4 + 8 zeta^3 + 4 zeta^2 - 8 zeta + 14) z",
    "15 x + (6 zeta^7 + 6 zeta^6 + 12 zeta^3 + 6 zeta^2 + 3) y + (4 zeta^7 + 4 zeta^6 - 10 zeta^4 + 8 zeta^3 + 4 zeta^2 + 10 zeta + 2) z",
    "15 x + (12 zeta^7 - 18 zeta^6 - 6 zeta^3 + 12 zeta^2 - 9) y + (-12 zeta^7 - 12 zeta^6 + 10 zeta^5 - 10 zeta^4 - 4 zeta^3 + 8 zeta^2 - 10 zeta + 4) z",
    "15 x + (-6 zeta^7 - 6 zeta^6 - 12 zeta^3 - 6 zeta^2 - 3) y + (-14 zeta^7 + 16 zeta^6 + 10 zeta^5 - 20 zeta^4 + 22 zeta^3 + 6 zeta^2 + 18) z",
    "15 x + (12 zeta^7 - 6 zeta^5 + 3 zeta^4 + 9 zeta - 6) y + (3 zeta^7 + zeta^5 + 2 zeta^4 + 5 zeta^3 + 5 zeta^2 - 4 zeta + 1) z",
    "15 x + (6 zeta^7 - 6 zeta^6 - 6 zeta^5 + 18 zeta^4 - 12 zeta^3 - 6 zeta^2 - 6 zeta - 9) y + (14 zeta^7 - 4 zeta^6 - 4 zeta^5 + 2 zeta^4 + 2 zeta^3 + 6 zeta^2 + 6 zeta - 6) z",
    "15 x + (12 zeta^7 - 18 zeta^6 - 6 zeta^3 + 12 zeta^2 - 9) y + (18 zeta^7 - 12 zeta^6 - 10 zeta^5 + 10 zeta^4 - 14 zeta^3 - 2 zeta^2 + 10 zeta - 16) z",
    "3 y + (2 zeta^7 - 3 zeta^5 + zeta^4 - 2 zeta^3 + 2 zeta^2 + zeta - 2) z",
};

inline constexpr std::string_view f4_forms[] = {
    "u",
    "x",
    "y",
    "z",
    "u + x",
    "x + y",
    "y + z",
    "u + x + y",
    "x + 2 y",
    "x + y + z",
    "u + x + 2 y",
    "u + x + y + z",
    "x + 2 y + z",
    "u + 2 x + 2 y",
    "u + x + 2 y + z",
    "x + 2 y + 2 z",
    "u + 2 x + 2 y + z",
    "u + x + 2 y + 2 z",
    "u + 2 x + 3 y + z",
    "u + 2 x + 2 y + 2 z",
    "u + 2 x + 3 y + 2 z",
    "u + 2 x + 4 y + 2 z",
    "u + 3 x + 4 y + 2 z",
    "2 u + 3 x + 4 y + 2 z",
};

inline constexpr std::string_view g29_forms[] = {
    "z",
    "u - x + i y + i z",
    "u - x",
    "x - y",
    "u - x + i y - i z",
    "y + z",
    "u + i x - y + i z",
    "u - x - i y - i z",
    "u - y",
    "u - x - i y + i z",
    "u - i x + i y + z",
    "u + i x - y - i z",
    "x + z",
    "u - i x - y - i z",
    "u - i x - y + i z",
    "u + i x - i y + z",
    "y - z",
    "u - i x + i y - z",
    "x - z",
    "u + i x - i y - z",
    "y",
    "u + z",
    "u + i x + y + i z",
    "u + i x + i y + z",
    "u + i x + i y - z",
    "u - z",
    "u - i x - i y + z",
    "u - i x + y - i z",
    "u - i x + y + i z",
    "x",
    "u + x + i y + i z",
    "u + x - i y - i z",
    "u + x - i y + i z",
    "u + i x + y - i z",
    "u - i x - i y - z",
    "u + x + i y - i z",
    "x + y",
    "u",
    "u + y",
    "u + x",
};

inline constexpr std::string_view g31_forms[] = {
    "u",
    "u + i x",
    "u - x",
    "u + x + y + z",
    "x - y",
    "u - i x",
    "u + x",
    "u - x - y - z",
    "x",
    "u - x - i y - i z",
    "u + i y",
    "u + x - i y - i z",
    "u - y",
    "u - x + y + z",
    "u - x + i y + i z",
    "x + i y",
    "y + z",
    "u - i x - y - i z",
    "u + x + i y + i z",
    "u + i x - i y + z",
    "u - i y",
    "u + y",
    "y",
    "u - i x + y - i z",
    "u + x - y + z",
    "u + i x - y + i z",
    "x - i y",
    "x + z",
    "u + i x + y + i z",
    "u - i x + i y + z",
    "u + x - y - z",
    "u - i x + i y - z",
    "u - x + y - z",
    "u + i x - i y - z",
    "u + i x + i y - z",
    "x + y",
    "u - x + i y - i z", // printed with -z; -i z is the hyperplane of the group
    "u + i x + y - i z",
    "u - i z",
    "u + i x - y - i z",
    "u + x + i y - i z",
    "u + i x + i y + z",
    "u + z",
    "u - i x - i y + z",
    "u - x - y + z",
    "u - i x - y + i z",
    "u - i x + y + i z",
    "u - x - i y + i z",
    "u - i x - i y - z",
    "x - i z",
    "x + i z",
    "y + i z",
    "u + i z",
    "u + x - i y + i z",
    "y - i z",
    "u - z",
    "u + x + y - z",
    "x - z",
    "z",
    "y - z",
};

inline constexpr Listing listings[] = {
    {"H3", 3, 5, "xyz", h3_forms, std::size(h3_forms)},
    {"G25", 3, 3, "xyz", g25_forms, std::size(g25_forms)},
    {"G24", 3, 7, "xyz", g24_forms, std::size(g24_forms)},
    {"G26", 3, 3, "xyz", g26_forms, std::size(g26_forms)},
    {"G27", 3, 15, "xyz", g27_forms, std::size(g27_forms)},
    {"F4", 4, 1, "uxyz", f4_forms, std::size(f4_forms)},
    {"G29", 4, 4, "uxyz", g29_forms, std::size(g29_forms)},
    {"G31", 4, 4, "uxyz", g31_forms, std::size(g31_forms)},
};

} // namespace arrfactor::catalog_data
