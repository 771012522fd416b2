#include "sdc/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace sdc {

LaurentPolyZ::LaurentPolyZ(int offset_, std::vector<long long> coeffs_)
    : offset(offset_), coeffs(std::move(coeffs_))
{
    trunc = offset + static_cast<int>(coeffs.size()) - 1;
}

LaurentPolyZ LaurentPolyZ::zero(int trunc_)
{
    LaurentPolyZ s;
    s.offset = 0;
    s.trunc = trunc_;
    if (trunc_ >= 0)
        s.coeffs.assign(static_cast<std::size_t>(trunc_) + 1, 0);
    return s;
}

LaurentPolyZ LaurentPolyZ::constant(long long c, int trunc_)
{
    LaurentPolyZ s = zero(trunc_);
    if (trunc_ >= 0)
        s.coeffs[0] = c;
    return s;
}

LaurentPolyZ LaurentPolyZ::monomial(long long c, int e, int trunc_)
{
    LaurentPolyZ s;
    s.offset = e;
    s.trunc = trunc_;
    if (trunc_ >= e)
        s.coeffs.assign(static_cast<std::size_t>(trunc_ - e) + 1, 0);
    if (!s.coeffs.empty())
        s.coeffs[0] = c;
    return s;
}

long long LaurentPolyZ::coeff(int e) const
{
    if (e < offset)
        return 0;
    if (e > trunc)
        throw std::out_of_range("LaurentPolyZ: coefficient beyond truncation");
    std::size_t i = static_cast<std::size_t>(e - offset);
    return i < coeffs.size() ? coeffs[i] : 0;
}

void LaurentPolyZ::set_coeff(int e, long long c)
{
    if (e < offset || e > trunc)
        throw std::out_of_range("LaurentPolyZ: exponent outside tracked range");
    std::size_t i = static_cast<std::size_t>(e - offset);
    if (i >= coeffs.size())
        coeffs.resize(i + 1, 0);
    coeffs[i] = c;
}

bool LaurentPolyZ::is_zero() const
{
    for (long long c : coeffs)
        if (c != 0)
            return false;
    return true;
}

std::string LaurentPolyZ::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int e = offset; e <= trunc; ++e) {
        long long c = coeff(e);
        if (c == 0)
            continue;
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        long long a = c > 0 ? c : -c;
        if (a != 1 || e == 0)
            os << a;
        if (e != 0) {
            if (a != 1)
                os << "*";
            os << "t";
            if (e != 1)
                os << "^" << e;
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

LaurentPolyZ series_mul(const LaurentPolyZ& a, const LaurentPolyZ& b)
{
    LaurentPolyZ out;
    out.offset = a.offset + b.offset;
    // Coefficient e of the product needs a_i for i <= e - b.offset and
    // b_j for j <= e - a.offset, so reliability caps at the smaller reach.
    out.trunc = std::min(a.offset + b.trunc, b.offset + a.trunc);
    if (out.trunc < out.offset) {
        out.coeffs.clear();
        return out;
    }
    out.coeffs.assign(static_cast<std::size_t>(out.trunc - out.offset) + 1, 0);
    for (int i = a.offset; i <= a.trunc; ++i) {
        long long ai = a.coeff(i);
        if (ai == 0)
            continue;
        for (int j = b.offset; j <= b.trunc && i + j <= out.trunc; ++j)
            out.coeffs[static_cast<std::size_t>(i + j - out.offset)] += ai * b.coeff(j);
    }
    return out;
}

LaurentPolyZ series_shift(const LaurentPolyZ& a, int e)
{
    LaurentPolyZ out = a;
    out.offset += e;
    out.trunc += e;
    return out;
}

bool series_agree(const LaurentPolyZ& a, const LaurentPolyZ& b)
{
    int hi = std::min(a.trunc, b.trunc);
    int lo = std::min(a.offset, b.offset);
    for (int e = lo; e <= hi; ++e)
        if (a.coeff(e) != b.coeff(e))
            return false;
    return true;
}

} // namespace sdc
