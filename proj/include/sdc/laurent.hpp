#pragma once

#include <string>
#include <vector>

namespace sdc {

/// Truncated integer Laurent series. Coefficients are exactly zero below
/// `offset`, stored exactly on [offset, trunc], and unknown above `trunc`.
struct LaurentPolyZ {
    int offset = 0;
    std::vector<long long> coeffs; // coeffs[i] is the coefficient of t^(offset+i)
    int trunc = -1;                // highest reliable exponent

    LaurentPolyZ() = default;
    LaurentPolyZ(int offset_, std::vector<long long> coeffs_);

    static LaurentPolyZ zero(int trunc);
    static LaurentPolyZ constant(long long c, int trunc);
    /// t^e scaled by c, reliable up to trunc.
    static LaurentPolyZ monomial(long long c, int e, int trunc);

    bool reliable(int e) const { return e <= trunc; }
    long long coeff(int e) const;
    void set_coeff(int e, long long c);

    /// True when every reliable coefficient is zero.
    bool is_zero() const;

    std::string to_string() const; // human form, e.g. "1 + 2t + 2t^2"
};

LaurentPolyZ series_mul(const LaurentPolyZ& a, const LaurentPolyZ& b);
LaurentPolyZ series_shift(const LaurentPolyZ& a, int e); // multiply by t^e

/// Equality of the two series on the range where both are reliable.
bool series_agree(const LaurentPolyZ& a, const LaurentPolyZ& b);

} // namespace sdc
