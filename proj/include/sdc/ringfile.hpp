#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sdc/polytext.hpp"

namespace sdc {

/// Parsed ring description file. Plain key = value lines:
///   field = QQ | GF <p>
///   vars = x y
///   degrees = 1 1        (optional, default all 1)
///   ideal = x^2, x*y     (comma-separated homogeneous polynomials; may be empty)
///   truncate = 12
/// Blank lines and '#' comments are ignored.
struct RingFile {
    std::string field_kind; // "QQ" or "GF"
    std::uint32_t p = 0;
    std::vector<std::string> vars;
    std::vector<int> degrees;
    std::vector<std::string> ideal_text;
    std::vector<IntPoly> ideal;
    int truncate = 0;

    bool operator==(const RingFile& o) const
    {
        return field_kind == o.field_kind && p == o.p && vars == o.vars
               && degrees == o.degrees && ideal_text == o.ideal_text
               && truncate == o.truncate;
    }
};

RingFile parse_ring_file(const std::string& text);
std::string render_ring_file(const RingFile& rf);

/// Explicit module presentation block inside a modules file:
///   module M
///   generators = 0, 2
///   relation = x^2, 0
///   relation = y, x*y
///   end
/// Each relation lists one polynomial per generator; the column must be
/// homogeneous.
struct ExplicitModule {
    std::vector<int> generators;
    std::vector<std::vector<IntPoly>> relations; // columns
};

struct ModuleFile {
    std::map<std::string, ExplicitModule> modules;
};

ModuleFile parse_module_file(const std::string& text,
                             const std::vector<std::string>& vars);

/// Reference grammar for module arguments:
///   R | k | dual | hom(A,B) | tensor(A,B) | <name from the modules file>
struct ModuleRef {
    enum class Kind { Ring, ResidueField, Dual, Hom, Tensor, Named };
    Kind kind = Kind::Ring;
    std::string name;                 // for Named
    std::vector<ModuleRef> args;      // for Hom/Tensor
    std::string spelling;             // canonical text
};

ModuleRef parse_module_ref(const std::string& text);

} // namespace sdc
