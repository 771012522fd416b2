#include "sdc/report.hpp"

#include <sstream>

namespace sdc {

std::string coeff_list(const LaurentPolyZ& s)
{
    std::ostringstream os;
    for (int e = s.offset; e <= s.trunc; ++e) {
        if (e != s.offset)
            os << ",";
        os << s.coeff(e);
    }
    return os.str();
}

std::string machine_series(const LaurentPolyZ& s)
{
    std::ostringstream os;
    os << "offset=" << s.offset << " coeffs=" << coeff_list(s) << " trunc=" << s.trunc;
    return os.str();
}

} // namespace sdc
