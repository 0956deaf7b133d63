#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrfactor {

using Int = mpz_class;
using Rat = mpq_class;

/// Polynomial in one variable with arbitrary-precision integer coefficients,
/// stored in ascending degree. The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;

    IntPoly(std::initializer_list<long> coeffs)
    {
        for (auto c : coeffs) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(std::size_t degree, const Int& c = 1)
    {
        std::vector<Int> v(degree + 1, 0);
        v[degree] = c;
        return IntPoly(std::move(v));
    }

    /// x^n - 1
    static IntPoly x_pow_minus_one(std::size_t n)
    {
        std::vector<Int> v(n + 1, 0);
        v[0] = -1;
        v[n] = 1;
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

    IntPoly& operator+=(const IntPoly& o)
    {
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), 0);
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o)
    {
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size(), 0);
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        trim();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return IntPoly(std::move(out));
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    /// Shift by t^k.
    IntPoly shifted(std::size_t k) const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<Int> v(k, 0);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return IntPoly(std::move(v));
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every leading term met along the way. Throws if the division is not
    /// exact over the integers.
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& d) const
    {
        if (d.is_zero()) {
            throw std::domain_error("IntPoly::divmod: division by zero polynomial");
        }
        std::vector<Int> rem = coeffs_;
        const auto dd = static_cast<std::size_t>(d.degree());
        if (rem.size() < dd + 1) {
            return {IntPoly{}, *this};
        }
        std::vector<Int> quot(rem.size() - dd, 0);
        const Int& lead = d.coeffs_.back();
        for (std::size_t k = rem.size(); k-- > dd;) {
            if (rem[k] == 0) {
                continue;
            }
            if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) {
                throw std::domain_error("IntPoly::divmod: non-integral quotient");
            }
            Int q = rem[k] / lead;
            quot[k - dd] = q;
            for (std::size_t j = 0; j <= dd; ++j) {
                rem[k - dd + j] -= q * d.coeffs_[j];
            }
        }
        return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
    }

    /// Exact quotient; throws when d does not divide *this.
    IntPoly exact_div(const IntPoly& d) const
    {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) {
            throw std::domain_error("IntPoly::exact_div: nonzero remainder");
        }
        return q;
    }

    Rat evaluate(const Rat& x) const
    {
        Rat acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * x + Rat(coeffs_[k]);
        }
        return acc;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form in the variable `var`, highest degree first.
    std::string to_string(const std::string& var = "t") const
    {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Int& c = coeffs_[k];
            if (c == 0) {
                continue;
            }
            Int mag = abs(c);
            if (first) {
                if (c < 0) {
                    os << "-";
                }
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (k == 0 || mag != 1) {
                os << mag.get_str();
            }
            if (k >= 1) {
                os << var;
            }
            if (k >= 2) {
                os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Int> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

} // namespace arrfactor
