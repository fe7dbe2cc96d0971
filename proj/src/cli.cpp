#include "kucalc/cli.hpp"

#include "kucalc/spectral.hpp"
#include "kucalc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace kucalc {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::uint64_t p = 0;
    unsigned t = 2;
    unsigned n = 2;
    unsigned m = 1;
    std::optional<unsigned> vmax;
    unsigned degmax = 0;
    unsigned amax = 10;
    std::string profile = "standard";
    std::string expr;
    bool json = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ModuleContext make_context(const Options& o)
{
    if (!is_prime(o.p))
        throw UsageError("p must be prime");
    if (o.n < 1)
        throw UsageError("n must be >= 1");
    if (o.t < o.n)
        throw UsageError("t must be >= n");
    return ModuleContext(o.p, o.t, o.n);
}

unsigned delta_bound(const Options& o)
{
    if (o.degmax < 2)
        throw UsageError("--degmax must be >= 2");
    return o.degmax / 2;
}

ordered_json monomial_json(unsigned p_exponent, const Monomial& x)
{
    return {{"p_exp", p_exponent}, {"m", x.m}, {"i", x.i}, {"j", x.j}};
}

int cmd_series(const Options& o, std::ostream& out)
{
    if (!is_prime(o.p))
        throw UsageError("p must be prime");
    if (o.m < 1)
        throw UsageError("m must be >= 1");
    const PSeries s = pn_series(o.p, o.m);
    ordered_json j{{"p", o.p}, {"m", o.m}, {"coeffs", ordered_json::array()}};
    for (std::size_t k = 0; k < s.length(); ++k)
        j["coeffs"].push_back(ordered_json::array({s.scalar(k).get_str(), k}));
    out << j.dump() << "\n";
    return 0;
}

int cmd_reduce(const Options& o, std::ostream& out)
{
    const ModuleContext ctx = make_context(o);
    const ModuleElement nf = normal_form(parse_element(o.expr), ctx);
    ordered_json j{{"normal_form", format_element(nf)}, {"terms", ordered_json::array()}};
    std::vector<std::pair<Monomial, PLocalScalar>> terms(nf.terms().begin(), nf.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.i, a.first.j, a.first.m) > std::tie(b.first.i, b.first.j, b.first.m);
    });
    for (const auto& [x, c] : terms)
        j["terms"].push_back({{"term", format_term(x, c)},
                              {"coefficient", c.to_string()},
                              {"m", x.m},
                              {"i", x.i},
                              {"j", x.j},
                              {"weight", ctx.weight(x).value},
                              {"degree", degree(x)}});
    if (!o.json)
        out << format_element(nf) << "\n";
    out << j.dump(o.json ? -1 : 2) << "\n";
    return 0;
}

int cmd_ann(const Options& o, std::ostream& out)
{
    const ModuleContext ctx = make_context(o);
    const IdealStaircase st = annihilator_staircase(ctx, o.vmax.value_or(default_vmax(ctx)));
    if (o.json) {
        ordered_json j{{"gens", ordered_json::array()}, {"complete", st.complete}};
        for (const auto& g : st.gens)
            j["gens"].push_back({g.a, g.b});
        out << j.dump() << "\n";
        return 0;
    }
    std::string s = "(";
    for (std::size_t k = 0; k < st.gens.size(); ++k) {
        const auto& g = st.gens[k];
        std::string gen;
        if (g.a > 0)
            gen = ipow(o.p, g.a).get_str();
        if (g.b > 0)
            gen += (gen.empty() ? "" : "*") + std::string("v") +
                   (g.b > 1 ? "^" + std::to_string(g.b) : "");
        if (gen.empty())
            gen = "1";
        s += (k ? ", " : "") + gen;
    }
    out << s << ")" << (st.complete ? "" : "  incomplete: raise --vmax") << "\n";
    return 0;
}

int cmd_ss(const Options& o, std::ostream& out)
{
    const ModuleContext ctx = make_context(o);
    const SweepResult sw = differential_sweep(ctx, delta_bound(o));
    if (o.json) {
        ordered_json j{{"p", o.p}, {"t", o.t}, {"n", o.n}, {"degmax", o.degmax}};
        j["records"] = ordered_json::array();
        j["survivors"] = {{"sources", ordered_json::array()}, {"targets", ordered_json::array()}};
        for (const auto& s : sw.slices) {
            for (const auto& r : s.records)
                j["records"].push_back({{"degree", 2 * r.delta},
                                        {"source", monomial_json(r.source_p, r.source)},
                                        {"target", monomial_json(r.target_p, r.target)},
                                        {"r", r.length}});
            for (const auto& v : s.sources)
                j["survivors"]["sources"].push_back(monomial_json(v.p_exponent, v.monomial));
            for (const auto& v : s.targets)
                j["survivors"]["targets"].push_back(monomial_json(v.p_exponent, v.monomial));
        }
        out << j.dump() << "\n";
        return 0;
    }
    for (const auto& s : sw.slices) {
        out << "degree " << 2 * s.delta << "\n";
        for (const auto& r : s.records)
            out << "  d: " << format_record(r, o.p) << "\n";
        for (const auto& v : s.sources)
            out << "  cycle: " << format_term(v.monomial, PLocalScalar(ipow(o.p, v.p_exponent)))
                << "\n";
        for (const auto& v : s.targets)
            out << "  cokernel: " << format_term(v.monomial, PLocalScalar(1)) << " order "
                << ipow(o.p, v.p_exponent).get_str() << "\n";
    }
    return 0;
}

ordered_json conjecture_json(const ConjectureReport& rep, std::uint64_t p)
{
    ordered_json j{{"p", rep.p}, {"t", rep.t}, {"n", rep.n}, {"degmax", 2 * rep.delta_max}};
    j["families"] = ordered_json::array();
    for (std::size_t f = 0; f < rep.families.size(); ++f) {
        const auto& s = rep.families[f];
        j["families"].push_back({{"k", s.k},
                                 {"source_p_exp", s.source_p},
                                 {"target_p_exp", s.target_p},
                                 {"v_shift", s.v_shift},
                                 {"di", s.di},
                                 {"dj", s.dj},
                                 {"r", s.length},
                                 {"matched", rep.family_counts[f]}});
    }
    auto records = [p](const std::vector<DifferentialRecord>& v) {
        ordered_json a = ordered_json::array();
        for (const auto& r : v)
            a.push_back(format_record(r, p));
        return a;
    };
    j["anomalous"] = records(rep.anomalous);
    j["indeterminate"] = records(rep.indeterminate);
    const int code = rep.exit_code();
    j["verdict"] = code == 0 ? "match" : (code == 2 ? "anomaly" : "indeterminate");
    return j;
}

int cmd_conjecture(const Options& o, std::ostream& out)
{
    const ModuleContext ctx = make_context(o);
    const ConjectureReport rep = conjecture_check(ctx, delta_bound(o));
    const ordered_json j = conjecture_json(rep, o.p);
    out << j.dump(o.json ? -1 : 2) << "\n";
    return rep.exit_code();
}

int cmd_verify(const Options& o, std::ostream& out)
{
    Profile profile;
    try {
        profile = parse_profile(o.profile);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.amax < 1)
        throw UsageError("--amax must be >= 1");
    const VerifyReport report = run_all(profile, o.amax);
    if (o.json)
        out << report.to_json().dump(2) << "\n";
    else
        out << report.to_text();
    return report.ok() ? 0 : 2;
}

void add_ptn(CLI::App* cmd, Options& o)
{
    cmd->add_option("-p", o.p, "prime")->required();
    cmd->add_option("-t", o.t, "exponent t (default 2)");
    cmd->add_option("-n", o.n, "exponent n (default 2)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"kucalc: exact ku-homology of Z/p^t x Z/p^n", "kucalc"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "print the [p^m]-series as JSON");
    series->add_option("-p", o.p, "prime")->required();
    series->add_option("-m", o.m, "exponent m (default 1)");

    auto* reduce = app.add_subcommand("reduce", "normal form of an element");
    reduce->add_option("expr", o.expr, "element, e.g. \"4*[3,2] - 6*v*[3,1]\"")->required();
    add_ptn(reduce, o);
    reduce->add_flag("--json", o.json, "JSON only");

    auto* ann = app.add_subcommand("ann", "annihilator of the toral class");
    add_ptn(ann, o);
    ann->add_option("--vmax", o.vmax, "largest v-exponent searched (default 2(g1+g2))");
    ann->add_flag("--json", o.json, "JSON output");

    auto* ss = app.add_subcommand("ss", "differentials and survivors up to a degree");
    add_ptn(ss, o);
    ss->add_option("--degmax", o.degmax, "largest topological degree")->required();
    ss->add_flag("--json", o.json, "JSON output");

    auto* conj = app.add_subcommand("conjecture", "compare differentials with the n families");
    add_ptn(conj, o);
    conj->add_option("--degmax", o.degmax, "largest topological degree")->required();
    conj->add_flag("--json", o.json, "compact JSON");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--profile", o.profile, "quick | standard | extended");
    verify->add_option("--amax", o.amax, "largest first index in the zero-element check");
    verify->add_flag("--json", o.json, "JSON report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    CLI::App* used = app.get_subcommands().front();
    try {
        if (used == series)
            return cmd_series(o, out);
        if (used == reduce)
            return cmd_reduce(o, out);
        if (used == ann)
            return cmd_ann(o, out);
        if (used == ss)
            return cmd_ss(o, out);
        if (used == conj)
            return cmd_conjecture(o, out);
        return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << used->help();
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace kucalc
