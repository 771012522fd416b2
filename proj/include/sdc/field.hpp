#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sdc {

inline bool is_prime_u32(std::uint32_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0)
            return false;
    return true;
}

/// Prime field GF(p). Elements are canonical representatives in [0, p).
/// p is restricted below 2^31 so that a*b fits in a 64-bit intermediate.
class GFp {
public:
    using Elem = std::uint32_t;

    explicit GFp(std::uint32_t p) : p_(p)
    {
        if (p < 2)
            throw std::invalid_argument("GF(p): invalid characteristic " + std::to_string(p));
        if (p >= (1u << 31))
            throw std::invalid_argument("GF(p): p must be < 2^31");
        if (!is_prime_u32(p))
            throw std::invalid_argument("GF(p): " + std::to_string(p) + " is not prime");
    }

    std::uint32_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const
    {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_)
            s -= p_;
        return Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return b <= a ? a - b : Elem(a + p_ - b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p_); }

    Elem inv(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("GF(p): inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0)
            t += p_;
        return Elem(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long n) const
    {
        long long r = n % static_cast<long long>(p_);
        if (r < 0)
            r += p_;
        return Elem(r);
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

    bool operator==(const GFp& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

/// The rational numbers. Elements are GMP rationals kept in canonical
/// (reduced, positive-denominator) form by mpq arithmetic.
class Rationals {
public:
    using Elem = mpq_class;

    std::uint32_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const
    {
        if (sgn(a) == 0)
            throw std::domain_error("QQ: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_check(b); }

    Elem from_int(long long n) const { return Elem(static_cast<long>(n)); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const Rationals&) const { return true; }

private:
    const Elem& inv_check(const Elem& b) const
    {
        if (sgn(b) == 0)
            throw std::domain_error("QQ: division by zero");
        return b;
    }
};

} // namespace sdc
