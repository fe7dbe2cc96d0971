#include "kucalc/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

namespace kucalc {

using nlohmann::ordered_json;

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Indeterminate:
        return "indeterminate";
    }
    return "unknown";
}

CheckResult CheckResult::pass(std::string name, ordered_json params, std::string note)
{
    return {std::move(name), std::move(params), CheckStatus::Pass, std::nullopt, std::move(note)};
}

CheckResult CheckResult::fail(std::string name, ordered_json params, std::string witness)
{
    if (witness.empty())
        throw std::logic_error("a failed check needs a witness");
    return {std::move(name), std::move(params), CheckStatus::Fail, std::move(witness), {}};
}

CheckResult CheckResult::indeterminate(std::string name, ordered_json params, std::string note)
{
    return {std::move(name), std::move(params), CheckStatus::Indeterminate, std::nullopt,
            std::move(note)};
}

ordered_json CheckResult::to_json() const
{
    ordered_json j;
    j["name"] = name;
    j["params"] = params;
    j["status"] = kucalc::to_string(status);
    j["witness"] = witness ? ordered_json(*witness) : ordered_json(nullptr);
    if (!note.empty())
        j["note"] = note;
    return j;
}

namespace {

ordered_json ptn(std::uint64_t p, unsigned t, unsigned n)
{
    return ordered_json{{"p", p}, {"t", t}, {"n", n}};
}

// c v^m [i,j], or zero when an index is not positive.
ModuleElement term(const PLocalScalar& c, long m, long i, long j)
{
    if (i < 1 || j < 1 || m < 0)
        return {};
    return ModuleElement(Monomial{static_cast<unsigned>(m), static_cast<unsigned>(i),
                                  static_cast<unsigned>(j)},
                         c);
}

PLocalScalar scalar(std::uint64_t x)
{
    return PLocalScalar(BigInt(x));
}

bool divisible(const PLocalScalar& c, std::uint64_t p)
{
    return vp(c, p) >= Valuation(1);
}

}  // namespace

bool e01_prediction_available(const ModuleContext& ctx)
{
    return ctx.n() == 1 || (ctx.t() == 2 && ctx.n() == 2);
}

std::uint64_t predicted_e0_log(const ModuleContext& ctx, unsigned delta)
{
    if (!e01_prediction_available(ctx))
        throw std::invalid_argument("no closed form for this (t,n)");
    const std::uint64_t g1 = ctx.g(1), g2 = ctx.g(2);
    std::uint64_t total = 0;
    for (unsigned i = 1; i <= delta; ++i)
        for (unsigned j = 1; i + j <= delta + 1; ++j) {
            const std::uint64_t m = delta + 1 - i - j;
            if (ctx.n() == 1)
                total += m < ctx.t() * g1 ? 1 : 0;
            else
                total += m < g1 ? 2 : (m < g1 + g2 ? 1 : 0);
        }
    return total;
}

std::uint64_t predicted_e1_log(const ModuleContext& ctx, int degree)
{
    if (!e01_prediction_available(ctx))
        throw std::invalid_argument("no closed form for this (t,n)");
    const int twice_delta = degree - kE1DegreeShift;
    if (twice_delta < 2 || twice_delta % 2 != 0)
        return 0;
    const auto delta = static_cast<unsigned>(twice_delta / 2);
    const std::uint64_t g1 = ctx.g(1), g2 = ctx.g(2);
    std::uint64_t total = 0;
    for (unsigned i = 1; i <= delta; ++i)
        for (unsigned j = 1; i + j <= delta + 1; ++j) {
            if (ctx.n() == 1)
                total += j <= ctx.t() * g1 ? 1 : 0;
            else if (j <= g1)
                total += 2;
            else if (i <= g1 || j <= g2)
                total += 1;
        }
    return total;
}

CheckResult check_lemma1(const ModuleContext& ctx, unsigned amax)
{
    const ordered_json params{{"p", ctx.p()}, {"n", ctx.n()}, {"amax", amax}};
    const PLocalScalar pn(ctx.pn());
    for (unsigned a = 1; a <= amax; ++a)
        for (unsigned b = 1; b <= ctx.g(1); ++b) {
            const ModuleElement r = normal_form(term(pn, 0, a, b), ctx);
            if (!r.is_zero())
                return CheckResult::fail("lemma1", params,
                                         "p^n*[" + std::to_string(a) + "," + std::to_string(b) +
                                             "] = " + format_element(r));
        }
    return CheckResult::pass("lemma1", params);
}

namespace {

CheckResult lemma2_impl(std::uint64_t p, unsigned kmax, unsigned a, const QTable& q,
                        const ModuleContext& ctx, std::string name)
{
    const ordered_json params{{"p", p}, {"kmax", kmax}, {"a", a}};
    const long g1 = static_cast<long>(ctx.g(1));
    const PLocalScalar u1 = ctx.units()->u_at(1);
    const PLocalScalar P = scalar(p);
    for (unsigned k = 2; k <= kmax; ++k) {
        ModuleElement x = term(P * P, 0, a, k * g1);
        for (long i = 0; i + 2 <= static_cast<long>(p); ++i)
            x -= term(u1 * q.q.at(i) * P, g1 + i, a, (k - 1) * g1 - i);
        const ModuleElement r = normal_form(x, ctx);
        for (const auto& [mono, c] : r.terms()) {
            if (mono.i != a || static_cast<long>(mono.m) < 2 * g1 || !divisible(c, p))
                return CheckResult::fail(name, params,
                                         "k=" + std::to_string(k) + ": residual " +
                                             format_element(r) + " has term " +
                                             format_term(mono, c));
        }
    }
    return CheckResult::pass(name, params);
}

CheckResult lemma3_impl(std::uint64_t p, unsigned a, const QTable& q, const ModuleContext& ctx,
                        std::string name)
{
    const ordered_json params{{"p", p}, {"a", a}};
    const long g1 = static_cast<long>(ctx.g(1));
    const long g2 = static_cast<long>(ctx.g(2));
    const PLocalScalar u1 = ctx.units()->u_at(1);
    const PLocalScalar P = scalar(p);
    ModuleElement x = term(P * P, 0, a, g1 + g2);
    x += term(u1 * P, g1, a, g2);
    for (long i = 1; i + 2 <= static_cast<long>(p); ++i)
        x -= term(u1 * q.q.at(i) * P, g1 + i, a, g2 - i);
    for (long k = 0; k + 2 <= static_cast<long>(p); ++k)
        x -= term(q.q.at(k), g2 + k, a, g1 - k);
    const ModuleElement r = normal_form(x, ctx);
    for (const auto& [mono, c] : r.terms()) {
        if (mono.i != a || static_cast<long>(mono.m) < 2 * g1 ||
            static_cast<long>(mono.j) > static_cast<long>(p) * g1 || !divisible(c, p))
            return CheckResult::fail(name, params,
                                     "residual " + format_element(r) + " has term " +
                                         format_term(mono, c));
    }
    return CheckResult::pass(name, params);
}

}  // namespace

CheckResult check_lemma2(std::uint64_t p, unsigned kmax, unsigned a,
                         const std::optional<QTable>& q_override)
{
    const ModuleContext ctx(p, 2, 2);
    if (kmax < 2 || kmax > p + 1)
        throw std::invalid_argument("lemma2: kmax must lie in [2, p+1]");
    return lemma2_impl(p, kmax, a, q_override ? *q_override : *ctx.qtable(), ctx, "lemma2");
}

CheckResult check_lemma3(std::uint64_t p, unsigned a, const std::optional<QTable>& q_override)
{
    const ModuleContext ctx(p, 2, 2);
    return lemma3_impl(p, a, q_override ? *q_override : *ctx.qtable(), ctx, "lemma3");
}

CheckResult check_proposition(std::uint64_t p, bool part_b)
{
    const ModuleContext ctx(p, 2, 2);
    ordered_json params{{"p", p}, {"part_b", part_b}};
    const unsigned g1 = static_cast<unsigned>(ctx.g(1));
    const unsigned g2 = static_cast<unsigned>(ctx.g(2));
    const PLocalScalar P = scalar(p);

    const ModuleElement image = boundary(ModuleElement(Monomial{0, 1, static_cast<unsigned>(p)}), ctx);
    const ModuleElement expected =
        normal_form(term(-(ctx.units()->u_at(1) * P), g1, 1, 1), ctx);
    if (image != expected || image.size() != 1 ||
        vp(image.terms().begin()->second, p) != Valuation(1))
        return CheckResult::fail("proposition", params,
                                 "boundary([1," + std::to_string(p) + "]) = " + format_element(image) +
                                     ", expected " + format_element(expected));
    if (!part_b)
        return CheckResult::pass("proposition", params, "part a only");

    const Monomial top{g1 + g2, 1, 1};
    if (!image_membership(ModuleElement(top), ctx))
        return CheckResult::fail("proposition", params,
                                 format_term(top, PLocalScalar(1)) + " is not in the image");
    const std::uint64_t mu2 = conjectured_families(ctx).at(1).length;
    const Monomial source{0, static_cast<unsigned>(p), static_cast<unsigned>(p * p)};
    const SliceSweep sw = sweep_slice(DegreeSlice(ctx, g1 + g2 + 1));
    for (const auto& rec : sw.records)
        if (rec.source == source && rec.source_p == 1 && rec.target == top && rec.target_p == 0 &&
            rec.length == mu2)
            return CheckResult::pass("proposition", params, "paired " + format_record(rec, p));
    std::string seen;
    for (const auto& rec : sw.records)
        if (rec.source == source)
            seen += format_record(rec, p) + "; ";
    return CheckResult::fail("proposition", params,
                             "no record p*[p,p^2] -> v^(g1+g2)[1,1]; records from source: " +
                                 (seen.empty() ? std::string("none") : seen));
}

CheckResult check_permanent_cycle(std::uint64_t p, std::optional<Monomial> at)
{
    const ModuleContext ctx(p, 2, 2);
    const unsigned g1 = static_cast<unsigned>(ctx.g(1));
    const Monomial x = at.value_or(Monomial{0, static_cast<unsigned>((p + 2) * g1 - 1), g1});
    const ordered_json params{{"p", p}, {"i", x.i}, {"j", x.j}};
    const bool by_kernel = permanent_cycle_check(ctx, x.i, x.j);
    const SliceSweep sw = sweep_slice(DegreeSlice(ctx, x.i + x.j - 1));
    const Monomial src{0, x.i, x.j};
    const bool by_sweep = std::any_of(sw.sources.begin(), sw.sources.end(), [&](const auto& s) {
        return s.monomial == src && s.p_exponent == 0;
    });
    if (by_kernel != by_sweep)
        return CheckResult::fail("permanent_cycle", params,
                                 "kernel basis and sweep disagree at " +
                                     format_term(src, PLocalScalar(1)));
    if (by_kernel)
        return CheckResult::pass("permanent_cycle", params);
    std::string w = format_term(src, PLocalScalar(1)) + " is not the leading term of a cycle";
    for (const auto& rec : sw.records)
        if (rec.source == src && rec.source_p == 0) {
            w += "; supports " + format_record(rec, p);
            break;
        }
    return CheckResult::fail("permanent_cycle", params, w);
}

CheckResult check_lemma_chop(std::uint64_t p, unsigned kmax)
{
    const ModuleContext ctx(p, 2, 2);
    const unsigned g1 = static_cast<unsigned>(ctx.g(1));
    const ordered_json params{{"p", p}, {"kmax", kmax}};
    const unsigned last = std::min<unsigned>(kmax, static_cast<unsigned>(p - 1));
    for (unsigned k = 0; k <= last; ++k) {
        const unsigned alpha = (static_cast<unsigned>(p) - k) * g1;
        const Monomial source{0, alpha, (k + 2) * g1};
        const Monomial target{g1, alpha, (k + 1) * g1};
        const DegreeSlice slice(ctx, source.i + source.j - 1);
        const Weight bound = ctx.weight(source);
        std::vector<std::size_t> cols;
        for (std::size_t s = 0; s < slice.size(); ++s)
            if (slice.weight(s) <= bound)
                cols.push_back(s);
        IntMatrix a(slice.size(), cols.size() + slice.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t r = 0; r < slice.size(); ++r)
                a(r, c) = slice.boundary_matrix()(r, cols[c]);
        for (std::size_t c = 0; c < slice.size(); ++c)
            for (std::size_t r = 0; r < slice.size(); ++r)
                a(r, cols.size() + c) = slice.relation_matrix()(r, c);
        const IntVector b = slice.coordinates(ModuleElement(target, scalar(p)));
        if (!solve_plocal(a, b, p))
            return CheckResult::fail("lemma_chop", params,
                                     "k=" + std::to_string(k) + ": " +
                                         format_term(target, scalar(p)) +
                                         " has no preimage of weight <= " +
                                         std::to_string(bound.value));
    }
    return CheckResult::pass("lemma_chop", params);
}

CheckResult check_e01_orders(std::uint64_t p, unsigned t, unsigned n, unsigned degree_max)
{
    const ModuleContext ctx(p, t, n);
    ordered_json params = ptn(p, t, n);
    params["degree_max"] = degree_max;
    params["e1_shift"] = kE1DegreeShift;
    if (!e01_prediction_available(ctx))
        return CheckResult::indeterminate("e01_orders", params, "no closed form for this case");
    for (const SliceOrders& s : einfty_orders(ctx, degree_max)) {
        const auto delta = static_cast<unsigned>(s.degree / 2);
        const std::uint64_t coker = s.coker.log_order(p);
        const std::uint64_t ker = s.ker.log_order(p);
        const std::uint64_t e0 = predicted_e0_log(ctx, delta);
        const std::uint64_t e1 = predicted_e1_log(ctx, s.degree + kE1DegreeShift);
        if (s.coker.free_rank != 0 || s.ker.free_rank != 0 || coker != e0 || ker != e1) {
            std::ostringstream w;
            w << "degree " << s.degree << ": coker p^" << coker << " (E0 predicts p^" << e0
              << "), ker p^" << ker << " (E1 in degree " << s.degree + kE1DegreeShift
              << " predicts p^" << e1 << ")";
            return CheckResult::fail("e01_orders", params, w.str());
        }
    }
    return CheckResult::pass("e01_orders", params);
}

namespace {

std::vector<IdealStaircase::Generator> expected_annihilator(const ModuleContext& ctx)
{
    const auto g1 = static_cast<unsigned>(ctx.g(1));
    const auto g2 = static_cast<unsigned>(ctx.g(2));
    if (ctx.n() == 1)
        return {{1, 0}, {0, ctx.t() * g1}};
    return {{2, 0}, {1, g1}, {0, g1 + g2}};
}

// v_1 = v^{p-1} substituted into (p^2, p v_1, v_1^{p+2}) or (p, v_1^t).
std::vector<IdealStaircase::Generator> bp_generators(const ModuleContext& ctx)
{
    const auto e = static_cast<unsigned>(ctx.p() - 1);
    if (ctx.n() == 1)
        return {{1, 0}, {0, ctx.t() * e}};
    return {{2, 0}, {1, e}, {0, static_cast<unsigned>(ctx.p() + 2) * e}};
}

std::string format_gens(const std::vector<IdealStaircase::Generator>& gens)
{
    std::string s = "{";
    for (std::size_t k = 0; k < gens.size(); ++k)
        s += (k ? ",(" : "(") + std::to_string(gens[k].a) + "," + std::to_string(gens[k].b) + ")";
    return s + "}";
}

bool proven_case(unsigned t, unsigned n)
{
    return n == 1 || (t == 2 && n == 2);
}

}  // namespace

CheckResult check_annihilator(std::uint64_t p, unsigned t, unsigned n)
{
    const ModuleContext ctx(p, t, n);
    const ordered_json params = ptn(p, t, n);
    if (!proven_case(t, n))
        return CheckResult::indeterminate("annihilator", params, "no closed form for this case");
    const IdealStaircase st = annihilator_staircase(ctx, default_vmax(ctx));
    const auto want = expected_annihilator(ctx);
    if (!st.complete || st.gens != want)
        return CheckResult::fail("annihilator", params,
                                 "computed " + format_gens(st.gens) +
                                     (st.complete ? "" : " (incomplete)") + ", expected " +
                                     format_gens(want));
    return CheckResult::pass("annihilator", params, format_gens(st.gens));
}

CheckResult check_bp_comparison(std::uint64_t p, unsigned t, unsigned n)
{
    const ModuleContext ctx(p, t, n);
    const ordered_json params = ptn(p, t, n);
    if (!proven_case(t, n))
        throw std::invalid_argument("bp_comparison: only (2,2) and (t,1) are defined");
    const IdealStaircase st = annihilator_staircase(ctx, default_vmax(ctx));
    const auto bp = bp_generators(ctx);
    if (!st.complete || st.gens != bp)
        return CheckResult::fail("bp_comparison", params,
                                 "ku staircase " + format_gens(st.gens) + " vs BP " + format_gens(bp));
    return CheckResult::pass("bp_comparison", params, format_gens(bp));
}

CheckResult check_differentials(std::uint64_t p, unsigned t, unsigned n, unsigned delta_max)
{
    const ModuleContext ctx(p, t, n);
    ordered_json params = ptn(p, t, n);
    params["delta_max"] = delta_max;
    const ConjectureReport rep = conjecture_check(ctx, delta_max);
    std::uint64_t longest = 0;
    for (const auto& f : rep.families)
        longest = std::max(longest, f.length);
    if (!rep.anomalous.empty())
        return CheckResult::fail("differentials", params,
                                 "unexpected " + format_record(rep.anomalous.front(), p));
    for (const auto& rec : differential_sweep(ctx, delta_max).records())
        if (rec.length > longest)
            return CheckResult::fail("differentials", params,
                                     "longer than " + std::to_string(longest) + ": " +
                                         format_record(rec, p));
    std::string counts;
    for (std::size_t f = 0; f < rep.families.size(); ++f)
        counts += (f ? ", r=" : "r=") + std::to_string(rep.families[f].length) + ": " +
                  std::to_string(rep.family_counts[f]);
    return CheckResult::pass("differentials", params, counts);
}

CheckResult check_unit_up(std::uint64_t p)
{
    const PSeries s = pn_series(p, 2);
    const std::size_t top = s.length() - 1;
    const Valuation v = vp(s.scalar(top), p);
    const ordered_json params{{"p", p}};
    std::string note = "a_" + std::to_string(top) + " = " + s.scalar(top).get_str() + "*v^" +
                       std::to_string(top) + " has valuation " + v.to_string() +
                       ", so it is not of the form u*p*v^" + std::to_string(top) +
                       "; u_p is left undefined";
    if (v != Valuation(0))
        return CheckResult::fail("unit_up", params, "top coefficient is divisible by p");
    return CheckResult::indeterminate("unit_up", params, note);
}

CheckResult check_mu2(std::uint64_t p)
{
    const ModuleContext ctx(p, 2, 2);
    const std::uint64_t g1 = ctx.g(1), g2 = ctx.g(2);
    const std::uint64_t with_plus = g1 * (p * p + 1) + g2 * (p + 1);
    const std::uint64_t with_minus = g1 * (p * p + 1) + g2 * (p - 1);
    ordered_json params{{"p", p}, {"formula_plus", with_plus}, {"formula_minus", with_minus}};
    const SliceSweep sw = sweep_slice(DegreeSlice(ctx, static_cast<unsigned>(g1 + g2 + 1)));
    std::optional<std::uint64_t> observed;
    for (const auto& rec : sw.records)
        if (rec.source_p == 1)
            observed = std::max(observed.value_or(0), rec.length);
    if (!observed)
        return CheckResult::fail("mu2", params, "no differential from a p-multiple observed");
    params["observed"] = *observed;
    if (*observed != with_plus)
        return CheckResult::fail("mu2", params,
                                 "observed length " + std::to_string(*observed) +
                                     " differs from g1(p^2+1)+g2(p+1) = " +
                                     std::to_string(with_plus));
    return CheckResult::pass("mu2", params,
                             "g1(p^2+1)+g2(p-1) = " + std::to_string(with_minus) +
                                 " does not match the observed length");
}

CheckResult fault_lemma1(std::uint64_t p, unsigned n)
{
    PSeries rel = pn_series(p, n);
    rel.coeffs.at(1) = KuPoly(PLocalScalar(BigInt(rel.scalar(1) + 1)), 1);
    const ModuleContext ctx = ModuleContext::with_relation_series(p, std::max(2u, n), n, rel);
    CheckResult r = check_lemma1(ctx, 10);
    r.name = "lemma1[C(p^n,2)+1]";
    return r;
}

CheckResult fault_lemma2(std::uint64_t p)
{
    const ModuleContext ctx(p, 2, 2);
    QTable q = *ctx.qtable();
    if (q.q.size() < 2)
        throw std::invalid_argument("fault_lemma2 needs p >= 3");
    q.q[1] += PLocalScalar(1);
    return lemma2_impl(p, 2, 5, q, ctx, "lemma2[q1+1]");
}

CheckResult fault_lemma3(std::uint64_t p)
{
    const ModuleContext ctx(p, 2, 2);
    QTable q = *ctx.qtable();
    q.q[0] = -q.q[0];
    return lemma3_impl(p, 6, q, ctx, "lemma3[-q0]");
}

CheckResult negative_control(const CheckResult& inner)
{
    ordered_json params = inner.params;
    const std::string name = "negative_control:" + inner.name;
    if (inner.status == CheckStatus::Fail)
        return CheckResult::pass(name, params, "fault detected: " + *inner.witness);
    return CheckResult::fail(name, params, "fault-injected check did not fail");
}

Profile parse_profile(const std::string& name)
{
    if (name == "quick")
        return Profile::Quick;
    if (name == "standard")
        return Profile::Standard;
    if (name == "extended")
        return Profile::Extended;
    throw std::invalid_argument("unknown profile '" + name + "'");
}

std::size_t VerifyReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const auto& c) { return c.status == s; }));
}

ordered_json VerifyReport::to_json() const
{
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const auto& c : checks)
        j["checks"].push_back(c.to_json());
    j["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"indeterminate", count(CheckStatus::Indeterminate)}};
    return j;
}

std::string VerifyReport::to_text() const
{
    std::ostringstream out;
    for (const auto& c : checks) {
        std::string status = kucalc::to_string(c.status);
        std::transform(status.begin(), status.end(), status.begin(), ::toupper);
        out << status << "  " << c.name << " " << c.params.dump();
        if (c.witness)
            out << "\n      witness: " << *c.witness;
        else if (!c.note.empty())
            out << "\n      " << c.note;
        out << "\n";
    }
    out << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
        << count(CheckStatus::Indeterminate) << " indeterminate\n";
    return out.str();
}

VerifyReport run_all(Profile profile, unsigned amax)
{
    std::vector<std::uint64_t> primes{2};
    if (profile != Profile::Quick)
        primes.push_back(3);
    if (profile == Profile::Extended)
        primes.push_back(5);

    std::vector<std::function<CheckResult()>> jobs;
    for (std::uint64_t p : primes) {
        // Slice computations at p = 5 are limited to small degrees.
        const bool full = p <= 3;
        const unsigned delta_max = full ? 12 : 8;
        for (unsigned n : {1u, 2u})
            jobs.push_back([p, n, amax] { return check_lemma1(ModuleContext(p, 2, n), amax); });
        for (unsigned a : {1u, 3u, 5u})
            jobs.push_back([p, a] { return check_lemma2(p, static_cast<unsigned>(p + 1), a); });
        for (unsigned a : {1u, 3u, 6u})
            jobs.push_back([p, a] { return check_lemma3(p, a); });
        jobs.push_back([p] { return check_unit_up(p); });
        jobs.push_back([p, full] { return check_proposition(p, full); });
        if (full) {
            jobs.push_back([p] { return check_permanent_cycle(p); });
            jobs.push_back([p] { return check_lemma_chop(p, static_cast<unsigned>(p - 1)); });
            jobs.push_back([p] { return check_mu2(p); });
            for (auto [t, n] : {std::pair{2u, 2u}, {2u, 1u}, {3u, 1u}}) {
                jobs.push_back([p, t, n] { return check_annihilator(p, t, n); });
                jobs.push_back([p, t, n] { return check_bp_comparison(p, t, n); });
            }
        }
        jobs.push_back([p, delta_max] { return check_differentials(p, 2, 2, delta_max); });
        jobs.push_back([p, delta_max] { return check_differentials(p, 2, 1, delta_max); });
        const unsigned d22 = p == 2 ? 24 : 16;
        const unsigned d1 = p == 2 ? 24 : 16;
        jobs.push_back([p, d22] { return check_e01_orders(p, 2, 2, d22); });
        jobs.push_back([p, d1] { return check_e01_orders(p, 2, 1, d1); });
        jobs.push_back([p, d1] { return check_e01_orders(p, 3, 1, d1); });
    }
    jobs.push_back([] { return negative_control(fault_lemma1(3, 2)); });
    jobs.push_back([] { return negative_control(fault_lemma2(3)); });
    jobs.push_back([] { return negative_control(fault_lemma3(3)); });
    jobs.push_back([] {
        CheckResult r = check_permanent_cycle(2, Monomial{0, 1, 2});
        return negative_control(r);
    });

    std::vector<std::future<CheckResult>> running;
    running.reserve(jobs.size());
    for (auto& job : jobs)
        running.push_back(std::async(std::launch::async, job));
    VerifyReport report;
    for (auto& f : running)
        report.checks.push_back(f.get());
    return report;
}

}  // namespace kucalc
