#include "sdc/ringfile.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace sdc {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

long long parse_int_strict(const std::string& s, int line)
{
    std::size_t pos = 0;
    long long v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", line, 1);
    }
    if (pos != s.size())
        throw ParseError("trailing characters after integer '" + s + "'", line, 1);
    return v;
}

} // namespace

RingFile parse_ring_file(const std::string& text)
{
    RingFile rf;
    bool saw_field = false, saw_vars = false, saw_trunc = false, saw_ideal = false;
    std::optional<std::pair<int, std::string>> ideal_line;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#')
            continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line, 1);
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key == "field") {
            auto parts = split_ws(val);
            if (parts.size() == 1 && parts[0] == "QQ") {
                rf.field_kind = "QQ";
            } else if (parts.size() == 2 && parts[0] == "GF") {
                long long p = parse_int_strict(parts[1], line);
                if (p < 2 || p >= (1ll << 31))
                    throw ParseError("invalid characteristic '" + parts[1] + "'", line,
                                     1);
                rf.field_kind = "GF";
                rf.p = static_cast<std::uint32_t>(p);
            } else {
                throw ParseError("field must be 'QQ' or 'GF <p>'", line, 1);
            }
            saw_field = true;
        } else if (key == "vars") {
            rf.vars = split_ws(val);
            saw_vars = true;
        } else if (key == "degrees") {
            for (const std::string& w : split_ws(val))
                rf.degrees.push_back(static_cast<int>(parse_int_strict(w, line)));
        } else if (key == "ideal") {
            ideal_line = {line, val};
            saw_ideal = true;
        } else if (key == "truncate") {
            rf.truncate = static_cast<int>(parse_int_strict(val, line));
            saw_trunc = true;
        } else {
            throw ParseError("unknown key '" + key + "'", line, 1);
        }
    }
    if (!saw_field)
        throw ParseError("missing 'field'", line, 1);
    if (!saw_vars)
        throw ParseError("missing 'vars'", line, 1);
    if (!saw_trunc)
        throw ParseError("missing 'truncate'", line, 1);
    if (saw_ideal && !ideal_line->second.empty()) {
        for (const std::string& p : split(ideal_line->second, ',')) {
            if (p.empty())
                throw ParseError("empty polynomial in ideal list", ideal_line->first, 1);
            rf.ideal_text.push_back(p);
            rf.ideal.push_back(parse_poly(p, rf.vars, ideal_line->first));
        }
    }
    if (!rf.degrees.empty() && rf.degrees.size() != rf.vars.size())
        throw ParseError("degrees list length disagrees with vars", line, 1);
    return rf;
}

std::string render_ring_file(const RingFile& rf)
{
    std::ostringstream os;
    os << "field = " << (rf.field_kind == "QQ" ? "QQ" : "GF " + std::to_string(rf.p))
       << "\n";
    os << "vars =";
    for (const std::string& v : rf.vars)
        os << " " << v;
    os << "\n";
    if (!rf.degrees.empty()) {
        os << "degrees =";
        for (int d : rf.degrees)
            os << " " << d;
        os << "\n";
    }
    os << "ideal = ";
    for (std::size_t i = 0; i < rf.ideal_text.size(); ++i) {
        if (i)
            os << ", ";
        os << rf.ideal_text[i];
    }
    os << "\n";
    os << "truncate = " << rf.truncate << "\n";
    return os.str();
}

ModuleFile parse_module_file(const std::string& text,
                             const std::vector<std::string>& vars)
{
    ModuleFile mf;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    std::string cur_name;
    ExplicitModule cur;
    bool in_module = false;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#')
            continue;
        if (!in_module) {
            auto parts = split_ws(s);
            if (parts.size() != 2 || parts[0] != "module")
                throw ParseError("expected 'module <name>'", line, 1);
            cur_name = parts[1];
            cur = ExplicitModule{};
            in_module = true;
            continue;
        }
        if (s == "end") {
            for (const auto& rel : cur.relations)
                if (rel.size() != cur.generators.size())
                    throw ParseError("relation length disagrees with generator count",
                                     line, 1);
            if (mf.modules.count(cur_name))
                throw ParseError("duplicate module '" + cur_name + "'", line, 1);
            mf.modules[cur_name] = std::move(cur);
            in_module = false;
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value' or 'end'", line, 1);
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key == "generators") {
            for (const std::string& w : split(val, ','))
                for (const std::string& u : split_ws(w))
                    cur.generators.push_back(
                        static_cast<int>(parse_int_strict(u, line)));
        } else if (key == "relation") {
            std::vector<IntPoly> col;
            for (const std::string& p : split(val, ','))
                col.push_back(parse_poly(p.empty() ? "0" : p, vars, line));
            cur.relations.push_back(std::move(col));
        } else {
            throw ParseError("unknown key '" + key + "' in module block", line, 1);
        }
    }
    if (in_module)
        throw ParseError("unterminated module block '" + cur_name + "'", line, 1);
    return mf;
}

namespace {

struct RefParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && s[pos] == ' ')
            ++pos;
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size()
               && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos)
            throw ParseError("expected a module name", 1, static_cast<int>(pos + 1));
        return s.substr(start, pos - start);
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

    ModuleRef parse()
    {
        std::string name = ident();
        ModuleRef ref;
        if (name == "R") {
            ref.kind = ModuleRef::Kind::Ring;
        } else if (name == "k") {
            ref.kind = ModuleRef::Kind::ResidueField;
        } else if (name == "dual") {
            ref.kind = ModuleRef::Kind::Dual;
        } else if (name == "hom" || name == "tensor") {
            ref.kind = name == "hom" ? ModuleRef::Kind::Hom : ModuleRef::Kind::Tensor;
            if (!eat('('))
                throw ParseError("expected '(' after '" + name + "'", 1,
                                 static_cast<int>(pos + 1));
            ref.args.push_back(parse());
            if (!eat(','))
                throw ParseError("expected ',' in '" + name + "(A,B)'", 1,
                                 static_cast<int>(pos + 1));
            ref.args.push_back(parse());
            if (!eat(')'))
                throw ParseError("expected ')' closing '" + name + "'", 1,
                                 static_cast<int>(pos + 1));
        } else {
            ref.kind = ModuleRef::Kind::Named;
            ref.name = name;
        }
        switch (ref.kind) {
        case ModuleRef::Kind::Ring:
            ref.spelling = "R";
            break;
        case ModuleRef::Kind::ResidueField:
            ref.spelling = "k";
            break;
        case ModuleRef::Kind::Dual:
            ref.spelling = "dual";
            break;
        case ModuleRef::Kind::Hom:
            ref.spelling = "hom(" + ref.args[0].spelling + "," + ref.args[1].spelling + ")";
            break;
        case ModuleRef::Kind::Tensor:
            ref.spelling =
                "tensor(" + ref.args[0].spelling + "," + ref.args[1].spelling + ")";
            break;
        case ModuleRef::Kind::Named:
            ref.spelling = ref.name;
            break;
        }
        return ref;
    }
};

} // namespace

ModuleRef parse_module_ref(const std::string& text)
{
    RefParser p{text};
    ModuleRef ref = p.parse();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing characters in module reference", 1,
                         static_cast<int>(p.pos + 1));
    return ref;
}

} // namespace sdc
