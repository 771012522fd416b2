#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sdc {

/// Exponent vector; index = variable, entry = exponent.
using Monomial = std::vector<int>;

inline int weighted_degree(const Monomial& m, const std::vector<int>& var_degrees)
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * var_degrees[i];
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

/// Lexicographic order with the first variable heaviest.
inline bool lex_greater(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return false;
}

/// All monomials of weighted degree d, listed in descending lex order.
inline std::vector<Monomial> monomials_of_degree(int d, const std::vector<int>& var_degrees)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    Monomial cur(var_degrees.size(), 0);
    auto rec = [&](auto&& self, std::size_t var, int rem) -> void {
        if (var == var_degrees.size()) {
            if (rem == 0)
                out.push_back(cur);
            return;
        }
        if (var + 1 == var_degrees.size()) {
            if (rem % var_degrees[var] == 0) {
                cur[var] = rem / var_degrees[var];
                out.push_back(cur);
                cur[var] = 0;
            }
            return;
        }
        for (int e = rem / var_degrees[var]; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e * var_degrees[var]);
        }
        cur[var] = 0;
    };
    if (var_degrees.empty()) {
        if (d == 0)
            out.push_back(Monomial{});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

struct IntTerm {
    long long coeff = 0;
    Monomial mono;
};

/// Polynomial with integer coefficients over named variables; the coefficient
/// field is applied later via Field::from_int.
struct IntPoly {
    std::vector<IntTerm> terms;

    bool is_zero() const
    {
        for (const IntTerm& t : terms)
            if (t.coeff != 0)
                return false;
        return true;
    }
};

/// Degree when every nonzero term has the same weighted degree; nullopt
/// otherwise. The zero polynomial reports degree 0.
inline std::optional<int> homogeneous_degree(const IntPoly& p, const std::vector<int>& var_degrees)
{
    std::optional<int> deg;
    for (const IntTerm& t : p.terms) {
        if (t.coeff == 0)
            continue;
        int d = weighted_degree(t.mono, var_degrees);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

std::string mono_to_string(const Monomial& m, const std::vector<std::string>& names);
std::string poly_to_string(const IntPoly& p, const std::vector<std::string>& names);

} // namespace sdc
