#include "sdc/polytext.hpp"

#include <cctype>
#include <sstream>

namespace sdc {

namespace {

struct PolyParser {
    const std::string& s;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;
    int line;
    int col_base;

    int column() const { return col_base + static_cast<int>(pos); }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column()); }

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long long parse_int()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }

    int parse_var()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size()
               && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start)
            fail("expected a variable or integer");
        std::string name = s.substr(start, pos - start);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name)
                return static_cast<int>(i);
        pos = start;
        fail("unknown variable '" + name + "'");
    }

    // power := atom ['^' INT]
    IntTerm parse_power()
    {
        IntTerm t;
        t.coeff = 1;
        t.mono.assign(vars.size(), 0);
        char c = peek();
        if (c == '\0')
            fail("unexpected end of polynomial");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.coeff = parse_int();
        } else {
            int v = parse_var();
            t.mono[static_cast<std::size_t>(v)] = 1;
        }
        if (eat('^')) {
            long long e = parse_int();
            if (e < 0)
                fail("negative exponent");
            if (!t.mono.empty() && t.coeff == 1) {
                bool is_var = false;
                for (std::size_t i = 0; i < t.mono.size(); ++i)
                    if (t.mono[i] == 1)
                        is_var = true;
                if (is_var) {
                    for (int& x : t.mono)
                        if (x == 1)
                            x = static_cast<int>(e);
                    return t;
                }
            }
            // integer base: fold the power into the coefficient
            long long base = t.coeff, r = 1;
            for (long long i = 0; i < e; ++i)
                r *= base;
            t.coeff = r;
        }
        return t;
    }

    // term := power ('*' power)*
    IntTerm parse_term()
    {
        IntTerm t = parse_power();
        while (eat('*')) {
            IntTerm u = parse_power();
            t.coeff *= u.coeff;
            t.mono = mono_mul(t.mono, u.mono);
        }
        return t;
    }

    IntPoly parse_expr()
    {
        IntPoly p;
        bool neg = eat('-');
        IntTerm t = parse_term();
        if (neg)
            t.coeff = -t.coeff;
        p.terms.push_back(std::move(t));
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                IntTerm u = parse_term();
                if (c == '-')
                    u.coeff = -u.coeff;
                p.terms.push_back(std::move(u));
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size())
            fail(std::string("unexpected character '") + s[pos] + "'");
        return p;
    }
};

} // namespace

IntPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names,
                   int line, int column_base)
{
    PolyParser p{text, var_names, 0, line, column_base};
    return p.parse_expr();
}

std::string mono_to_string(const Monomial& m, const std::vector<std::string>& names)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << "*";
        os << names[i];
        if (m[i] != 1)
            os << "^" << m[i];
        first = false;
    }
    if (first)
        os << "1";
    return os.str();
}

std::string poly_to_string(const IntPoly& p, const std::vector<std::string>& names)
{
    std::ostringstream os;
    bool first = true;
    for (const IntTerm& t : p.terms) {
        if (t.coeff == 0)
            continue;
        long long c = t.coeff;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        bool unit_mono = true;
        for (int e : t.mono)
            if (e != 0)
                unit_mono = false;
        if (a != 1 || unit_mono)
            os << a;
        if (!unit_mono) {
            if (a != 1)
                os << "*";
            os << mono_to_string(t.mono, names);
        }
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace sdc
