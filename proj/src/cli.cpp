#include "sdc/cli.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "sdc/bounds.hpp"
#include "sdc/duality.hpp"
#include "sdc/report.hpp"
#include "sdc/ringfile.hpp"

namespace sdc {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Split on top-level commas only (hom(A,B) keeps its inner comma).
std::vector<std::string> split_top_level(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<long long> parse_coeff_list(const std::string& s)
{
    std::vector<long long> out;
    for (const std::string& w : split_top_level(s))
        out.push_back(std::stoll(w));
    return out;
}

struct WindowArg {
    bool set = false;
    int lo = 0, hi = -1;
};

WindowArg parse_window(const std::string& s)
{
    WindowArg w;
    if (s.empty())
        return w;
    std::size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw InputError("window must be '<lo>..<hi>'");
    w.lo = std::stoi(s.substr(0, dots));
    w.hi = std::stoi(s.substr(dots + 2));
    w.set = true;
    return w;
}

struct CommonArgs {
    std::string ring_path;
    std::string modules_path;
    std::string format = "human";
    bool machine() const { return format == "machine"; }
};

struct Invocation {
    CommonArgs common;
    std::string module_ref = "R";
    std::string candidate;
    std::string g_ref, c_ref;
    std::string chain;
    int length = 6;
    int cutoff = 6;
    bool factorization = false;
    std::string thm;
    std::optional<int> d_arg;
    std::optional<int> g_arg;
    std::optional<long long> p_arg;
    std::optional<long long> mu_arg;
    std::string window_text;
    std::string series_a, series_b;
    int offset_a = 0, offset_b = 0;
};

/// Per-ring session: resolves module references with caching so repeated
/// mentions share one build.
template <class F>
class Session {
public:
    Session(GradedAlgebra<F> ring, ModuleFile mods)
        : ring_(std::move(ring)), mods_(std::move(mods))
    {
    }

    const GradedAlgebra<F>& ring() const { return ring_; }

    const GradedModule<F>& resolve(const ModuleRef& ref)
    {
        auto it = cache_.find(ref.spelling);
        if (it != cache_.end())
            return *it->second;
        std::unique_ptr<GradedModule<F>> built;
        switch (ref.kind) {
        case ModuleRef::Kind::Ring:
            built = std::make_unique<GradedModule<F>>(
                GradedModule<F>::free_module(ring_, {0}));
            break;
        case ModuleRef::Kind::ResidueField:
            built = std::make_unique<GradedModule<F>>(
                GradedModule<F>::residue_field(ring_));
            break;
        case ModuleRef::Kind::Dual:
            built = std::make_unique<GradedModule<F>>(matlis_dual(ring_));
            break;
        case ModuleRef::Kind::Hom: {
            const GradedModule<F>& a = resolve(ref.args[0]);
            const GradedModule<F>& b = resolve(ref.args[1]);
            built = std::make_unique<GradedModule<F>>(hom_module(a, b).module);
            break;
        }
        case ModuleRef::Kind::Tensor: {
            const GradedModule<F>& a = resolve(ref.args[0]);
            const GradedModule<F>& b = resolve(ref.args[1]);
            built = std::make_unique<GradedModule<F>>(tensor_module(a, b));
            break;
        }
        case ModuleRef::Kind::Named: {
            auto mit = mods_.modules.find(ref.name);
            if (mit == mods_.modules.end())
                throw InputError("unknown module '" + ref.name + "'");
            built = std::make_unique<GradedModule<F>>(build_explicit(mit->second));
            break;
        }
        }
        auto [pos, ok] = cache_.emplace(ref.spelling, std::move(built));
        (void)ok;
        return *pos->second;
    }

private:
    GradedModule<F> build_explicit(const ExplicitModule& em)
    {
        for (int a : em.generators)
            if (a < 0)
                throw InputError("module generators must sit in nonnegative degrees");
        GradedFree<F> f0(&ring_, em.generators);
        // infer relation degrees from the homogeneous columns
        std::vector<int> rel_shifts;
        for (const auto& col : em.relations) {
            std::optional<int> b;
            for (std::size_t j = 0; j < col.size(); ++j) {
                if (col[j].is_zero())
                    continue;
                int deg = ring_.poly_degree(col[j]) + em.generators[j];
                if (!b)
                    b = deg;
                else if (*b != deg)
                    throw InputError("relation column is not homogeneous");
            }
            if (!b)
                b = 0;
            if (*b > ring_.dmax())
                throw InputError("relation degree exceeds the truncation window");
            rel_shifts.push_back(*b);
        }
        GradedFree<F> f1(&ring_, rel_shifts);
        RMatrix<F> p(f0, f1);
        for (std::size_t c = 0; c < em.relations.size(); ++c)
            for (std::size_t j = 0; j < em.relations[c].size(); ++j) {
                const IntPoly& poly = em.relations[c][j];
                if (poly.is_zero())
                    continue;
                RElem<F> e;
                e.deg = ring_.poly_degree(poly);
                e.c = ring_.normal_form(poly);
                p.set_entry(static_cast<int>(j), static_cast<int>(c), std::move(e));
            }
        return GradedModule<F>(std::move(p));
    }

    GradedAlgebra<F> ring_;
    ModuleFile mods_;
    std::map<std::string, std::unique_ptr<GradedModule<F>>> cache_;
};

std::string fmt_window(int lo, int hi)
{
    return std::to_string(lo) + ".." + std::to_string(hi);
}

template <class F>
std::string betti_degree_list(const std::map<int, int>& row)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, count] : row) {
        if (!first)
            os << ",";
        os << deg << ":" << count;
        first = false;
    }
    return os.str();
}

template <class F>
void emit_betti(std::ostream& out, const Resolution<F>& res, bool machine)
{
    auto b = res.betti();
    auto gb = res.graded_betti();
    // a minimal resolution that hits zero stays zero; drop the tail
    int last = 0;
    for (int i = 0; i <= res.length(); ++i)
        if (b[static_cast<std::size_t>(i)] > 0)
            last = i;
    if (machine) {
        for (int i = 0; i <= last; ++i) {
            out << "betti i=" << i << " b=" << b[static_cast<std::size_t>(i)];
            if (b[static_cast<std::size_t>(i)] > 0)
                out << " degrees=" << betti_degree_list<F>(gb[static_cast<std::size_t>(i)]);
            out << "\n";
        }
    } else {
        out << "  step  betti  generator degrees\n";
        for (int i = 0; i <= last; ++i) {
            out << "  " << i << "     " << b[static_cast<std::size_t>(i)] << "      ";
            bool first = true;
            for (const auto& [deg, count] : gb[static_cast<std::size_t>(i)]) {
                if (!first)
                    out << ", ";
                out << deg << " (x" << count << ")";
                first = false;
            }
            if (first)
                out << "-";
            out << "\n";
        }
    }
}

template <class F>
std::string resolution_status(const Resolution<F>& res)
{
    if (res.any_partial())
        return "partial";
    return res.fully_certified() ? "certified" : "heuristic";
}

// --------------------------------------------------------------------------
// subcommand bodies, templated over the coefficient field

template <class F>
int cmd_ring_info(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const GradedAlgebra<F>& R = s.ring();
    const bool machine = inv.common.machine();
    LaurentPolyZ h = R.hilbert_coeffs(R.dmax());
    int max_var_deg = 1;
    for (int w : R.var_degrees())
        max_var_deg = std::max(max_var_deg, w);
    int socle_hi = R.artinian_certified() ? R.top_degree() : R.dmax() - max_var_deg;
    auto socle = R.socle_basis(0, socle_hi);
    int socle_dim = 0;
    std::ostringstream socle_degrees;
    for (const auto& sl : socle)
        for (std::size_t i = 0; i < sl.vecs.size(); ++i) {
            if (socle_dim)
                socle_degrees << ",";
            socle_degrees << sl.degree;
            ++socle_dim;
        }
    if (machine) {
        out << "ring field="
            << (R.field().characteristic() == 0
                    ? "QQ"
                    : "GF" + std::to_string(R.field().characteristic()))
            << " vars=";
        for (std::size_t i = 0; i < R.var_names().size(); ++i)
            out << (i ? "," : "") << R.var_names()[i];
        out << " truncate=" << R.dmax() << "\n";
        out << "hilbert " << machine_series(h) << "\n";
        out << "artinian status="
            << (R.artinian_certified() ? "certified"
                : R.artinian_in_window() ? "window"
                                         : "no");
        if (R.artinian_in_window())
            out << " top=" << R.top_degree();
        out << "\n";
        out << "socle dim=" << socle_dim;
        if (socle_dim)
            out << " degrees=" << socle_degrees.str();
        out << " window=" << fmt_window(0, socle_hi) << "\n";
        if (R.artinian_certified())
            out << "type mu0=" << cm_type(R) << "\n";
    } else {
        out << "field:      "
            << (R.field().characteristic() == 0
                    ? "QQ"
                    : "GF(" + std::to_string(R.field().characteristic()) + ")")
            << "\n";
        out << "variables: ";
        for (std::size_t i = 0; i < R.var_names().size(); ++i)
            out << " " << R.var_names()[i] << " (degree "
                << R.var_degrees()[i] << ")";
        out << "\n";
        out << "truncation: " << R.dmax() << "\n";
        out << "Hilbert:    " << h.to_string() << "\n";
        out << "artinian:   "
            << (R.artinian_certified()
                    ? "certified, top degree " + std::to_string(R.top_degree())
                : R.artinian_in_window()
                    ? "within window (uncertified), top degree "
                          + std::to_string(R.top_degree())
                    : "no")
            << "\n";
        out << "socle:      dimension " << socle_dim << " on degrees [0, " << socle_hi
            << "]";
        if (socle_dim)
            out << " at " << socle_degrees.str();
        out << "\n";
        if (R.artinian_certified())
            out << "type:       " << cm_type(R) << "\n";
    }
    return kExitOk;
}

template <class F>
int cmd_resolve(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    ModuleRef mref = parse_module_ref(inv.module_ref);
    const GradedModule<F>& m = s.resolve(mref);
    Resolution<F> res = minimal_free_resolution(m, inv.length);
    if (machine)
        out << "resolution module=" << mref.spelling << " length=" << res.length()
            << " status=" << resolution_status(res) << "\n";
    else
        out << "minimal free resolution of " << inv.module_ref << " to length "
            << res.length() << " (" << resolution_status(res) << ")\n";
    emit_betti(out, res, machine);
    return res.any_partial() ? kExitInconclusive : kExitOk;
}

template <class F>
int cmd_betti(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    const GradedModule<F>& m = s.resolve(parse_module_ref(inv.module_ref));
    Resolution<F> res = minimal_free_resolution(m, inv.length);
    emit_betti(out, res, machine);
    return res.any_partial() ? kExitInconclusive : kExitOk;
}

template <class F>
int cmd_poincare(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    const GradedModule<F>& m = s.resolve(parse_module_ref(inv.module_ref));
    Resolution<F> res = minimal_free_resolution(m, inv.length);
    LaurentPolyZ p = poincare_series(res, inv.length);
    if (machine)
        out << "poincare " << machine_series(p) << "\n";
    else
        out << "Poincare series of " << inv.module_ref << ": " << p.to_string()
            << " (to order " << inv.length << ")\n";
    return res.any_partial() ? kExitInconclusive : kExitOk;
}

template <class F>
int cmd_bass(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    WindowArg w = parse_window(inv.window_text);
    std::optional<std::pair<int, int>> window;
    if (w.set)
        window = {w.lo, w.hi};
    BassResult<F> bass = bass_series(s.ring(), inv.cutoff, window);
    for (int i = 0; i <= inv.cutoff; ++i) {
        bool sat = bass.saturated[static_cast<std::size_t>(i)];
        if (machine) {
            out << "bass i=" << i << " mu=" << bass.series.coeff(i);
            if (sat)
                out << " saturated=1";
            out << "\n";
        } else {
            out << "mu^" << i << " = " << bass.series.coeff(i)
                << (sat ? "   (window saturated: unreliable)" : "") << "\n";
        }
    }
    if (machine)
        out << "bassseries " << machine_series(bass.series) << " window="
            << fmt_window(bass.window_lo, bass.window_hi) << "\n";
    else
        out << "Bass series: " << bass.series.to_string() << "   [window "
            << fmt_window(bass.window_lo, bass.window_hi) << "]\n";
    return bass.saturation_free() && !bass.resolution_partial ? kExitOk
                                                              : kExitInconclusive;
}

template <class F>
int emit_verdict_exit(std::ostream& out, bool machine, VerdictStatus status,
                      int cutoff, const std::string& extra_keys,
                      const std::string& human_text,
                      const std::string& inconclusive_detail = "")
{
    if (machine) {
        if (status == VerdictStatus::Inconclusive)
            out << "status=inconclusive reason=window-saturation"
                << (inconclusive_detail.empty() ? "" : " " + inconclusive_detail)
                << " cutoff=" << cutoff << extra_keys << "\n";
        else
            out << "status=" << verdict_name(status) << " cutoff=" << cutoff
                << extra_keys << "\n";
    } else {
        out << human_text << "\n";
    }
    switch (status) {
    case VerdictStatus::VerifiedToCutoff:
        return kExitOk;
    case VerdictStatus::Refuted:
        return kExitRefuted;
    default:
        return kExitInconclusive;
    }
}

template <class F>
std::string sdc_witness_keys(const SemidualizingVerdict<F>& v)
{
    std::ostringstream os;
    if (!v.homothety.iso) {
        os << " reason=homothety";
        if (v.homothety.witness_degree)
            os << " witness_degree=" << *v.homothety.witness_degree << " witness_kind="
               << v.homothety.witness_kind;
    } else if (v.refuting_index) {
        os << " reason=ext witness_i=" << *v.refuting_index;
    }
    return os.str();
}

template <class F>
int cmd_check_sdc(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    ModuleRef cref = parse_module_ref(inv.candidate);
    const GradedModule<F>& c = s.resolve(cref);
    SemidualizingVerdict<F> v = check_semidualizing(c, inv.cutoff);
    std::ostringstream extra;
    extra << " candidate=" << cref.spelling << " beta0=" << v.beta0
          << " window=" << fmt_window(v.window_lo, v.window_hi)
          << sdc_witness_keys(v);
    std::ostringstream human;
    human << "semidualizing check for " << cref.spelling << " (cutoff " << inv.cutoff
          << "): " << verdict_name(v.status) << "\n";
    human << "  homothety: " << (v.homothety.iso ? "isomorphism" : "FAILS");
    if (!v.homothety.iso && v.homothety.witness_degree)
        human << " at degree " << *v.homothety.witness_degree << " ("
              << v.homothety.witness_kind << ")";
    human << "\n  beta_0 = " << v.beta0
          << (v.free_rank_one ? " (free of rank one)" : "");
    if (v.refuting_index)
        human << "\n  Ext^" << *v.refuting_index << "(C,C) is nonzero";
    return emit_verdict_exit<F>(out, machine, v.status, inv.cutoff, extra.str(),
                                human.str());
}

template <class F>
int cmd_check_reflexive(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    ModuleRef gref = parse_module_ref(inv.g_ref);
    ModuleRef crefr = parse_module_ref(inv.c_ref);
    const GradedModule<F>& g = s.resolve(gref);
    const GradedModule<F>& c = s.resolve(crefr);
    SemidualizingVerdict<F> pre = check_semidualizing(c, inv.cutoff);
    if (pre.status != VerdictStatus::VerifiedToCutoff) {
        std::ostringstream extra;
        extra << " g=" << gref.spelling << " c=" << crefr.spelling << " precondition=failed";
        std::ostringstream human;
        human << "reflexivity check aborted: " << crefr.spelling
              << " is not verified semidualizing (" << verdict_name(pre.status) << ")";
        return emit_verdict_exit<F>(out, machine, pre.status, inv.cutoff, extra.str(),
                                    human.str());
    }
    ReflexivityVerdict<F> v = check_totally_reflexive(g, c, inv.cutoff);
    std::ostringstream extra;
    extra << " g=" << gref.spelling << " c=" << crefr.spelling;
    if (!v.biduality.iso && v.biduality.witness_degree)
        extra << " reason=biduality witness_degree=" << *v.biduality.witness_degree;
    else if (v.refuting_index)
        extra << " reason=ext witness_i=" << *v.refuting_index
              << " side=" << (v.refuted_on_hom_side ? "hom" : "g");
    std::ostringstream human;
    human << "total reflexivity of " << gref.spelling << " with respect to " << crefr.spelling
          << " (cutoff " << inv.cutoff << "): " << verdict_name(v.status);
    if (v.refuting_index)
        human << "\n  Ext^" << *v.refuting_index << "("
              << (v.refuted_on_hom_side ? "Hom(G,C)" : "G") << ", C) is nonzero";
    return emit_verdict_exit<F>(out, machine, v.status, inv.cutoff, extra.str(),
                                human.str());
}

template <class F>
int cmd_check_chain(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    std::vector<std::string> names;
    std::vector<const GradedModule<F>*> chain;
    for (const std::string& n : split_top_level(inv.chain)) {
        ModuleRef ref = parse_module_ref(n);
        names.push_back(ref.spelling);
        chain.push_back(&s.resolve(ref));
    }
    if (chain.empty())
        throw InputError("check-chain: empty chain");

    // precondition: every candidate verified semidualizing
    VerdictStatus pre_status = VerdictStatus::VerifiedToCutoff;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        SemidualizingVerdict<F> v = check_semidualizing(*chain[i], inv.cutoff);
        if (machine)
            out << "candidate i=" << i << " status=" << verdict_name(v.status)
                << " name=" << names[i] << " beta0=" << v.beta0 << "\n";
        else
            out << "candidate " << names[i] << ": " << verdict_name(v.status)
                << " (beta_0 = " << v.beta0 << ")\n";
        if (v.status == VerdictStatus::Refuted)
            pre_status = VerdictStatus::Refuted;
        else if (v.status == VerdictStatus::Inconclusive
                 && pre_status == VerdictStatus::VerifiedToCutoff)
            pre_status = VerdictStatus::Inconclusive;
    }
    if (pre_status != VerdictStatus::VerifiedToCutoff) {
        if (machine)
            out << "chain status="
                << (pre_status == VerdictStatus::Refuted ? "refuted" : "inconclusive")
                << " length=" << names.size() - 1 << " reason=candidate\n";
        else
            out << "chain rejected: a candidate failed the semidualizing check\n";
        return pre_status == VerdictStatus::Refuted ? kExitRefuted : kExitInconclusive;
    }

    ChainReport<F> rep = check_chain(chain, inv.cutoff);
    for (std::size_t i = 0; i < rep.links.size(); ++i) {
        const ChainLink<F>& link = rep.links[i];
        if (machine) {
            out << "link i=" << i + 1
                << " status=" << verdict_name(link.reflexivity.status)
                << " strict=" << (link.strict ? 1 : 0);
            if (!link.strict_known)
                out << " strictknown=0";
            if (link.reflexivity.refuting_index)
                out << " witness_i=" << *link.reflexivity.refuting_index;
            out << "\n";
        } else {
            out << "link " << names[i] << " <= " << names[i + 1] << ": "
                << verdict_name(link.reflexivity.status)
                << (link.strict ? " (strict)"
                    : link.strict_known ? " (not strict)"
                                        : " (strictness inconclusive)")
                << "\n";
        }
    }
    std::string status_word = rep.status == VerdictStatus::VerifiedToCutoff ? "valid"
                              : rep.status == VerdictStatus::Refuted ? "refuted"
                                                                     : "inconclusive";
    if (machine)
        out << "chain status=" << status_word << " length=" << rep.links.size()
            << " strict=" << (rep.all_strict ? 1 : 0) << " cutoff=" << inv.cutoff
            << "\n";
    else
        out << "chain of length " << rep.links.size() << ": " << status_word
            << (rep.all_strict ? ", all links strict" : "") << "\n";

    int exit = rep.status == VerdictStatus::VerifiedToCutoff ? kExitOk
               : rep.status == VerdictStatus::Refuted        ? kExitRefuted
                                                             : kExitInconclusive;

    if (inv.factorization && rep.status == VerdictStatus::VerifiedToCutoff) {
        FactorizationReport<F> f = factorization_check(chain, inv.cutoff);
        if (machine) {
            out << "factorization status=" << verdict_name(f.status)
                << " poincare=" << (f.poincare_ok ? "ok" : "mismatch");
            if (!f.hom_beta0.empty()) {
                out << " hombeta0=";
                for (std::size_t i = 0; i < f.hom_beta0.size(); ++i)
                    out << (i ? "," : "") << f.hom_beta0[i];
            }
            if (!f.evaluation.iso && f.evaluation.witness_degree)
                out << " witness_degree=" << *f.evaluation.witness_degree;
            out << "\n";
        } else {
            out << "factorization through hom factors: " << verdict_name(f.status)
                << (f.poincare_ok ? " (Poincare series product agrees to order "
                                        + std::to_string(f.poincare_trunc) + ")"
                                  : " (Poincare series mismatch)")
                << "\n";
        }
        if (f.status != VerdictStatus::VerifiedToCutoff)
            exit = kExitRefuted;
    }
    return exit;
}

template <class F>
int default_depth(const GradedAlgebra<F>& R, const std::optional<int>& g_arg)
{
    if (g_arg)
        return *g_arg;
    if (R.artinian_certified())
        return 0;
    // a nonzero socle element inside the window witnesses depth 0
    int max_var_deg = 1;
    for (int w : R.var_degrees())
        max_var_deg = std::max(max_var_deg, w);
    auto socle = R.socle_basis(0, R.dmax() - max_var_deg);
    for (const auto& sl : socle)
        if (!sl.vecs.empty())
            return 0;
    throw InputError("depth is not witnessed as 0; pass --g explicitly");
}

void emit_bound_report(std::ostream& out, bool machine, const BoundReport& rep)
{
    if (machine) {
        out << "bound thm=" << rep.predicate << " outcome=" << outcome_name(rep.outcome);
        if (rep.witness)
            out << " witness_i=" << *rep.witness;
        if (rep.condition)
            out << " condition=" << *rep.condition;
        if (rep.range_hi >= rep.range_lo)
            out << " range=" << fmt_window(rep.range_lo, rep.range_hi);
        out << "\n";
        if (!rep.conclusion.empty() && rep.outcome != BoundOutcome::Inconclusive) {
            out << "conclusion=" << rep.conclusion;
            if (rep.witness)
                out << " witness_i=" << *rep.witness;
            out << "\n";
        }
    } else {
        out << "predicate " << rep.predicate << ": " << outcome_name(rep.outcome) << "\n";
        if (!rep.detail.empty())
            out << "  " << rep.detail << "\n";
    }
}

template <class F>
int cmd_verify_bounds(Session<F>& s, const Invocation& inv, std::ostream& out)
{
    const bool machine = inv.common.machine();
    const GradedAlgebra<F>& R = s.ring();
    int g = default_depth(R, inv.g_arg);

    BoundReport rep;
    if (inv.thm == "0101" || inv.thm == "0103" || inv.thm == "0102") {
        WindowArg w = parse_window(inv.window_text);
        std::optional<std::pair<int, int>> window;
        if (w.set)
            window = {w.lo, w.hi};
        BassResult<F> bass = bass_series(R, inv.cutoff, window);
        if (!bass.saturation_free()) {
            if (machine)
                out << "status=inconclusive reason=window-saturation cutoff="
                    << inv.cutoff << "\n";
            else
                out << "Bass series saturated; widen the window or lower the cutoff\n";
            return kExitInconclusive;
        }
        if (inv.thm == "0101") {
            if (!inv.d_arg)
                throw InputError("--thm 0101 requires --d");
            rep = verify_chain_poly_bound(bass.series, g, *inv.d_arg);
        } else if (inv.thm == "0103") {
            if (!inv.d_arg)
                throw InputError("--thm 0103 requires --d");
            rep = verify_next_bass_bound(bass.series, g, *inv.d_arg);
        } else {
            rep = verify_small_bass_rigidity(bass.series, g, inv.p_arg);
        }
    } else if (inv.thm == "0101p") {
        if (!inv.d_arg)
            throw InputError("--thm 0101p requires --d");
        long long mu = inv.mu_arg ? *inv.mu_arg : cm_type(R);
        rep = verify_type_factor_bound(mu, *inv.d_arg);
    } else {
        throw InputError("unknown --thm '" + inv.thm + "' (use 0101|0101p|0103|0102)");
    }
    emit_bound_report(out, machine, rep);
    switch (rep.outcome) {
    case BoundOutcome::Holds:
        return kExitOk;
    case BoundOutcome::Fails:
        return kExitRefuted;
    default:
        return kExitInconclusive;
    }
}

int cmd_series_mul(const Invocation& inv, std::ostream& out)
{
    LaurentPolyZ a(inv.offset_a, parse_coeff_list(inv.series_a));
    LaurentPolyZ b(inv.offset_b, parse_coeff_list(inv.series_b));
    LaurentPolyZ p = series_mul(a, b);
    if (inv.common.machine())
        out << "series " << machine_series(p) << "\n";
    else
        out << "(" << a.to_string() << ") * (" << b.to_string()
            << ") = " << p.to_string() << "   [reliable to t^" << p.trunc << "]\n";
    return kExitOk;
}

template <class F>
int dispatch_with_field(const std::string& sub, const RingFile& rf, F field,
                        const Invocation& inv, std::ostream& out)
{
    typename GradedAlgebra<F>::Spec spec{field, rf.vars, rf.degrees, rf.ideal,
                                         rf.truncate};
    GradedAlgebra<F> ring(std::move(spec));
    ModuleFile mods;
    if (!inv.common.modules_path.empty())
        mods = parse_module_file(read_file(inv.common.modules_path), rf.vars);
    Session<F> session(std::move(ring), std::move(mods));
    if (sub == "ring-info")
        return cmd_ring_info(session, inv, out);
    if (sub == "resolve")
        return cmd_resolve(session, inv, out);
    if (sub == "betti")
        return cmd_betti(session, inv, out);
    if (sub == "poincare")
        return cmd_poincare(session, inv, out);
    if (sub == "bass")
        return cmd_bass(session, inv, out);
    if (sub == "check-sdc")
        return cmd_check_sdc(session, inv, out);
    if (sub == "check-reflexive")
        return cmd_check_reflexive(session, inv, out);
    if (sub == "check-chain")
        return cmd_check_chain(session, inv, out);
    if (sub == "verify-bounds")
        return cmd_verify_bounds(session, inv, out);
    throw InputError("unhandled subcommand '" + sub + "'");
}

int dispatch(const std::string& sub, const Invocation& inv, std::ostream& out)
{
    if (sub == "series-mul")
        return cmd_series_mul(inv, out);
    if (inv.common.ring_path.empty())
        throw InputError("subcommand '" + sub + "' requires --ring");
    RingFile rf = parse_ring_file(read_file(inv.common.ring_path));
    if (rf.field_kind == "QQ")
        return dispatch_with_field(sub, rf, Rationals{}, inv, out);
    return dispatch_with_field(sub, rf, GFp{rf.p}, inv, out);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err)
{
    CLI::App app{"homological invariants of graded quotient algebras"};
    app.require_subcommand(1);
    Invocation inv;

    auto add_common = [&](CLI::App* sub, bool needs_ring) {
        if (needs_ring)
            sub->add_option("--ring", inv.common.ring_path, "ring description file")
                ->required();
        sub->add_option("--modules", inv.common.modules_path,
                        "module definitions file");
        sub->add_option("--format", inv.common.format, "human|machine")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    CLI::App* info = app.add_subcommand("ring-info", "Hilbert data, socle, type");
    add_common(info, true);

    CLI::App* resolve = app.add_subcommand("resolve", "minimal free resolution");
    add_common(resolve, true);
    resolve->add_option("--module", inv.module_ref, "module reference")->required();
    resolve->add_option("--length", inv.length, "resolution length")->required();

    CLI::App* betti = app.add_subcommand("betti", "graded Betti table");
    add_common(betti, true);
    betti->add_option("--module", inv.module_ref, "module reference")->required();
    betti->add_option("--length", inv.length, "table length (default 6)");

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare series");
    add_common(poincare, true);
    poincare->add_option("--module", inv.module_ref, "module reference")->required();
    poincare->add_option("--length", inv.length, "series order")->required();

    CLI::App* bass = app.add_subcommand("bass", "Bass numbers of the ring");
    add_common(bass, true);
    bass->add_option("--cutoff", inv.cutoff, "highest Bass number")->required();
    bass->add_option("--window", inv.window_text, "internal degree window lo..hi");

    CLI::App* sdc = app.add_subcommand("check-sdc", "semidualizing candidate check");
    add_common(sdc, true);
    sdc->add_option("--candidate", inv.candidate, "module reference")->required();
    sdc->add_option("--cutoff", inv.cutoff, "Ext vanishing cutoff")->required();

    CLI::App* refl = app.add_subcommand("check-reflexive", "total reflexivity check");
    add_common(refl, true);
    refl->add_option("--g", inv.g_ref, "module G")->required();
    refl->add_option("--c", inv.c_ref, "semidualizing C")->required();
    refl->add_option("--cutoff", inv.cutoff, "Ext vanishing cutoff")->required();

    CLI::App* chain = app.add_subcommand("check-chain", "reflexivity-order chain check");
    add_common(chain, true);
    chain->add_option("--chain", inv.chain, "comma-separated candidates C0,C1,...")
        ->required();
    chain->add_option("--cutoff", inv.cutoff, "Ext vanishing cutoff")->required();
    chain->add_flag("--factorization", inv.factorization,
                    "also verify the tensor factorization");

    CLI::App* bounds = app.add_subcommand("verify-bounds", "Bass number bound predicates");
    add_common(bounds, true);
    bounds->add_option("--thm", inv.thm, "0101|0101p|0103|0102")->required();
    int d_val = 0, g_val = 0;
    long long p_val = 0, mu_val = 0;
    CLI::Option* dopt = bounds->add_option("--d", d_val, "chain length to test");
    CLI::Option* gopt = bounds->add_option("--g", g_val, "depth (default: witnessed 0)");
    CLI::Option* popt = bounds->add_option("--p", p_val, "smallest prime of the type");
    CLI::Option* muopt = bounds->add_option("--mu", mu_val, "type override for 0101p");
    bounds->add_option("--cutoff", inv.cutoff, "Bass series cutoff (default 6)");
    bounds->add_option("--window", inv.window_text, "internal degree window lo..hi");

    CLI::App* smul = app.add_subcommand("series-mul", "truncated series product");
    add_common(smul, false);
    smul->add_option("--a", inv.series_a, "coefficients c0,c1,...")->required();
    smul->add_option("--b", inv.series_b, "coefficients c0,c1,...")->required();
    smul->add_option("--offset-a", inv.offset_a, "offset of a (default 0)");
    smul->add_option("--offset-b", inv.offset_b, "offset of b (default 0)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (dopt->count())
        inv.d_arg = d_val;
    if (gopt->count())
        inv.g_arg = g_val;
    if (popt->count())
        inv.p_arg = p_val;
    if (muopt->count())
        inv.mu_arg = mu_val;

    try {
        std::string sub = app.get_subcommands().front()->get_name();
        try {
            return dispatch(sub, inv, out);
        } catch (const WindowError& e) {
            // truncation/saturation limits are inconclusive, not errors
            if (inv.common.machine())
                out << "status=inconclusive reason=window-saturation" << "\n";
            err << "window: " << e.what() << "\n";
            return kExitInconclusive;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace sdc
