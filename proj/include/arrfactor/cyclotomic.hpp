#pragma once

#include "arrfactor/int_poly.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrfactor {

inline unsigned euler_phi(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("euler_phi: n must be positive");
    }
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

/// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by Phi_d for
/// every proper divisor d of n. Results are cached.
inline IntPoly cyclotomic_poly(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("cyclotomic_poly: n must be positive");
    }
    static std::mutex mutex;
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    IntPoly p = IntPoly::x_pow_minus_one(n);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = p.exact_div(cyclotomic_poly(d));
        }
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, p);
    return p;
}

/// Q(zeta_n) with zeta fixed as the class of x modulo Phi_n. Instances live in
/// a process-wide registry and are never destroyed, so CycNum can hold a plain
/// pointer.
class CycField {
public:
    static const CycField& get(unsigned n)
    {
        static std::mutex mutex;
        static std::map<unsigned, std::unique_ptr<CycField>> registry;
        std::lock_guard lock(mutex);
        auto& slot = registry[n];
        if (!slot) {
            slot.reset(new CycField(n));
        }
        return *slot;
    }

    unsigned conductor() const { return n_; }
    std::size_t degree() const { return phi_; }
    const IntPoly& modulus() const { return modulus_; }

    /// Reduce an arbitrary-length coefficient vector modulo Phi_n in place.
    void reduce(std::vector<Rat>& c) const
    {
        const auto& m = modulus_.coeffs();
        for (std::size_t k = c.size(); k-- > phi_;) {
            if (c[k] == 0) {
                continue;
            }
            const Rat lead = c[k];
            // Phi_n is monic: x^phi = -(m_0 + ... + m_{phi-1} x^{phi-1})
            for (std::size_t j = 0; j < phi_; ++j) {
                if (m[j] != 0) {
                    c[k - phi_ + j] -= lead * m[j];
                }
            }
            c[k] = 0;
        }
        c.resize(phi_, 0);
    }

private:
    explicit CycField(unsigned n) : n_(n), phi_(euler_phi(n)), modulus_(cyclotomic_poly(n)) {}

    unsigned n_;
    std::size_t phi_;
    IntPoly modulus_;
};

namespace detail {

using RatPoly = std::vector<Rat>;

inline void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    RatPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    trim(out);
    return out;
}

inline RatPoly sub(RatPoly a, const RatPoly& b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), 0);
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        a[k] -= b[k];
    }
    trim(a);
    return a;
}

inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b)
{
    if (b.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    trim(a);
    if (a.size() < b.size()) {
        return {{}, a};
    }
    const std::size_t shift_max = a.size() - b.size();
    RatPoly q(shift_max + 1, 0);
    const Rat& lead = b.back();
    for (std::size_t s = shift_max + 1; s-- > 0;) {
        const std::size_t k = s + b.size() - 1;
        if (a[k] == 0) {
            continue;
        }
        Rat f = a[k] / lead;
        q[s] = f;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[s + j] -= f * b[j];
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

} // namespace detail

/// Exact element of Q(zeta_n), canonical on the power basis
/// 1, zeta, ..., zeta^{phi(n)-1}.
class CycNum {
public:
    CycNum() : CycNum(CycField::get(1)) {}

    explicit CycNum(const CycField& field) : field_(&field), c_(field.degree(), 0) {}

    CycNum(const CycField& field, const Rat& value) : CycNum(field) { c_[0] = value; }

    /// Arbitrary coefficient vector on powers of zeta; reduced to canonical form.
    CycNum(const CycField& field, std::vector<Rat> coeffs) : field_(&field), c_(std::move(coeffs))
    {
        for (auto& q : c_) {
            q.canonicalize();
        }
        field.reduce(c_);
    }

    static CycNum zeta(const CycField& field) { return zeta_pow(field, 1); }

    /// zeta^k for any integer k (negative allowed).
    static CycNum zeta_pow(const CycField& field, long k)
    {
        const long n = field.conductor();
        long e = ((k % n) + n) % n;
        std::vector<Rat> v(static_cast<std::size_t>(e) + 1, 0);
        v[static_cast<std::size_t>(e)] = 1;
        return CycNum(field, std::move(v));
    }

    const CycField& field() const { return *field_; }
    unsigned conductor() const { return field_->conductor(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const
    {
        for (const auto& q : c_) {
            if (q != 0) {
                return false;
            }
        }
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t k = 1; k < c_.size(); ++k) {
            if (c_[k] != 0) {
                return false;
            }
        }
        return true;
    }

    bool is_one() const { return c_[0] == 1 && is_rational(); }

    CycNum operator-() const
    {
        CycNum r(*this);
        for (auto& q : r.c_) {
            q = -q;
        }
        return r;
    }

    CycNum& operator+=(const CycNum& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        return *this;
    }

    CycNum& operator-=(const CycNum& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        return *this;
    }

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }

    friend CycNum operator*(const CycNum& a, const CycNum& b)
    {
        a.check_same(b);
        const std::size_t d = a.c_.size();
        if (b.is_rational()) {
            return a.scaled(b.c_[0]);
        }
        if (a.is_rational()) {
            return b.scaled(a.c_[0]);
        }
        std::vector<Rat> prod(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < d; ++j) {
                if (b.c_[j] != 0) {
                    prod[i + j] += a.c_[i] * b.c_[j];
                }
            }
        }
        CycNum r(*a.field_);
        a.field_->reduce(prod);
        r.c_ = std::move(prod);
        return r;
    }

    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum scaled(const Rat& s) const
    {
        CycNum r(*this);
        if (s == 0) {
            for (auto& q : r.c_) {
                q = 0;
            }
            return r;
        }
        for (auto& q : r.c_) {
            if (q != 0) {
                q *= s;
            }
        }
        return r;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// representative polynomial and Phi_n.
    CycNum inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("CycNum::inverse: division by zero");
        }
        if (is_rational()) {
            return CycNum(*field_, Rat(1) / c_[0]);
        }
        using detail::RatPoly;
        RatPoly modulus;
        for (const auto& m : field_->modulus().coeffs()) {
            modulus.emplace_back(m);
        }
        RatPoly r0 = modulus;
        RatPoly r1 = c_;
        detail::trim(r1);
        RatPoly s0;        // coefficient of a in r0
        RatPoly s1{Rat(1)}; // coefficient of a in r1
        while (r1.size() > 1) {
            auto [q, rem] = detail::divmod(r0, r1);
            RatPoly s2 = detail::sub(s0, detail::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant since Phi_n is irreducible and a != 0
        if (r1.empty()) {
            throw std::logic_error("CycNum::inverse: representative shares a factor with Phi_n");
        }
        const Rat inv_c = Rat(1) / r1[0];
        for (auto& q : s1) {
            q *= inv_c;
        }
        return CycNum(*field_, std::move(s1));
    }

    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    friend bool operator==(const CycNum& a, const CycNum& b)
    {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    /// Representation size used for pivot choice: nonzero coefficient count
    /// first, then total bit length of numerators and denominators.
    std::pair<std::size_t, std::size_t> representation_size() const
    {
        std::size_t nz = 0;
        std::size_t bits = 0;
        for (const auto& q : c_) {
            if (q != 0) {
                ++nz;
                bits += mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
            }
        }
        return {nz, bits};
    }

    std::size_t hash() const
    {
        std::size_t h = field_->conductor();
        for (const auto& q : c_) {
            h ^= std::hash<std::string>{}(q.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

    /// e.g. "3 - 2*zeta^2 + 1/2*zeta^3"
    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rat& q = c_[k];
            if (q == 0) {
                continue;
            }
            Rat mag = abs(q);
            if (first) {
                if (q < 0) {
                    os << "-";
                }
            } else {
                os << (q < 0 ? " - " : " + ");
            }
            first = false;
            if (k == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1) {
                os << mag.get_str() << "*";
            }
            os << "zeta";
            if (k > 1) {
                os << "^" << k;
            }
        }
        return first ? "0" : os.str();
    }

private:
    void check_same(const CycNum& o) const
    {
        if (field_ != o.field_) {
            throw std::invalid_argument("CycNum: conductor mismatch (" + std::to_string(conductor())
                                        + " vs " + std::to_string(o.conductor()) + ")");
        }
    }

    const CycField* field_;
    std::vector<Rat> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.to_string(); }

/// Image of a under zeta_n -> zeta_m^{m/n}; requires n | m.
inline CycNum embed(const CycNum& a, unsigned m)
{
    const unsigned n = a.conductor();
    if (m == 0 || m % n != 0) {
        throw std::invalid_argument("embed: conductor " + std::to_string(n) + " does not divide "
                                    + std::to_string(m));
    }
    const CycField& target = CycField::get(m);
    if (n == m) {
        return a;
    }
    const long step = static_cast<long>(m / n);
    CycNum out(target);
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
        if (a.coeffs()[j] != 0) {
            out += CycNum::zeta_pow(target, static_cast<long>(j) * step).scaled(a.coeffs()[j]);
        }
    }
    return out;
}

inline unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

} // namespace arrfactor
