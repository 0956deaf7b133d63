#pragma once

#include "arrfactor/arrangement.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrfactor {

/// Malformed arrangement text; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Text format:
///
///     # comment
///     dim 3 conductor 4
///     1 0  0 0  0 0        <- one hyperplane per line
///
/// Each hyperplane line holds phi(n) * l rationals (`p` or `p/q`): for each
/// coordinate, its coefficients on 1, zeta, ..., zeta^(phi(n)-1).
inline void write_arrangement(std::ostream& os, const Arrangement& a, const std::string& comment = "")
{
    if (!comment.empty()) {
        std::istringstream lines(comment);
        for (std::string l; std::getline(lines, l);) {
            os << "# " << l << "\n";
        }
    }
    os << "dim " << a.dim() << " conductor " << a.conductor() << "\n";
    for (const auto& h : a.hyperplanes()) {
        bool first = true;
        for (const auto& c : h.normal()) {
            if (!first) {
                os << "  ";
            }
            for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
                os << (k == 0 ? "" : " ") << c.coeffs()[k].get_str();
            }
            first = false;
        }
        os << "\n";
    }
}

inline std::string to_text(const Arrangement& a, const std::string& comment = "")
{
    std::ostringstream os;
    write_arrangement(os, a, comment);
    return os.str();
}

namespace detail {

inline Rat parse_rational(const std::string& tok, std::size_t line)
{
    Rat q;
    if (tok.empty() || q.set_str(tok, 10) != 0) {
        throw ParseError(line, "not a rational number: '" + tok + "'");
    }
    if (q.get_den() == 0) {
        throw ParseError(line, "zero denominator in '" + tok + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace detail

inline Arrangement read_arrangement(std::istream& is)
{
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t dim = 0;
    const CycField* field = nullptr;
    std::vector<Hyperplane> hs;
    for (std::string raw; std::getline(is, raw);) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        if (!have_header) {
            if (toks.size() != 4 || toks[0] != "dim" || toks[2] != "conductor") {
                throw ParseError(lineno, "expected header 'dim <l> conductor <n>'");
            }
            try {
                std::size_t pos = 0;
                const long l = std::stol(toks[1], &pos);
                if (pos != toks[1].size() || l < 0) {
                    throw std::invalid_argument("dim");
                }
                const long n = std::stol(toks[3], &pos);
                if (pos != toks[3].size() || n < 1 || n > 100000) {
                    throw std::invalid_argument("conductor");
                }
                dim = static_cast<std::size_t>(l);
                field = &CycField::get(static_cast<unsigned>(n));
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad dimension or conductor in header");
            }
            have_header = true;
            continue;
        }
        const std::size_t phi = field->degree();
        if (toks.size() != phi * dim) {
            throw ParseError(lineno, "expected " + std::to_string(phi * dim) + " coefficients, found "
                                         + std::to_string(toks.size()));
        }
        CycVector v;
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Rat> c;
            for (std::size_t k = 0; k < phi; ++k) {
                c.push_back(detail::parse_rational(toks[j * phi + k], lineno));
            }
            v.emplace_back(*field, std::move(c));
        }
        try {
            hs.emplace_back(std::move(v));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_header) {
        throw ParseError(lineno, "missing header 'dim <l> conductor <n>'");
    }
    try {
        return Arrangement(dim, *field, std::move(hs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

inline Arrangement from_text(const std::string& text)
{
    std::istringstream is(text);
    return read_arrangement(is);
}

} // namespace arrfactor
