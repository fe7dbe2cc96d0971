#include "kucalc/spectral.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace kucalc {

namespace {

IntMatrix negated(const IntMatrix& a)
{
    IntMatrix m = a;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = -m(r, c);
    return m;
}

template <class F>
auto parallel_map(unsigned first, unsigned last, F f)
{
    using R = decltype(f(first));
    std::vector<std::future<R>> jobs;
    for (unsigned d = first; d <= last; ++d)
        jobs.push_back(std::async(std::launch::async, f, d));
    std::vector<R> out;
    out.reserve(jobs.size());
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

}  // namespace

std::string format_record(const DifferentialRecord& rec, std::uint64_t p)
{
    auto side = [p](unsigned e, const Monomial& x) {
        return format_term(x, PLocalScalar(ipow(p, e)));
    };
    return side(rec.source_p, rec.source) + " -> " + side(rec.target_p, rec.target) +
           " (r=" + std::to_string(rec.length) + ")";
}

DegreeSlice build_slice(const ModuleContext& ctx, unsigned delta)
{
    return DegreeSlice(ctx, delta);
}

bool image_membership(const ModuleElement& target, const ModuleContext& ctx)
{
    if (target.is_zero())
        return true;
    const auto deg = target.homogeneous_degree();
    if (!deg)
        throw std::invalid_argument("image_membership: element is not homogeneous");
    const DegreeSlice slice(ctx, static_cast<unsigned>(*deg / 2));
    return solve_plocal(slice.image_matrix(), slice.coordinates(target), ctx.p()).has_value();
}

unsigned default_vmax(const ModuleContext& ctx)
{
    return static_cast<unsigned>(2 * (ctx.g(1) + ctx.g(2)));
}

IdealStaircase annihilator_staircase(const ModuleContext& ctx, unsigned vmax)
{
    IdealStaircase st;
    const std::uint64_t p = ctx.p();
    for (unsigned b = 0; b <= vmax; ++b) {
        if (st.complete) {
            st.profile.push_back(0);
            continue;
        }
        const DegreeSlice slice(ctx, b + 1);
        const PLocalSolver solver(slice.image_matrix(), p);
        IntVector rhs = slice.coordinates(ModuleElement(Monomial{b, 1, 1}));
        unsigned a = 0;
        while (a < ctx.n() && !solver.solvable(rhs)) {
            for (BigInt& x : rhs)
                x *= p;
            ++a;
        }
        if (!st.profile.empty() && a > st.profile.back())
            throw std::logic_error("annihilator profile is not monotone at b=" + std::to_string(b));
        if (st.profile.empty() || a < st.profile.back())
            st.gens.push_back({a, b});
        st.profile.push_back(a);
        if (a == 0)
            st.complete = true;
    }
    return st;
}

SliceSweep sweep_slice(const DegreeSlice& slice)
{
    const ModuleContext& ctx = slice.context();
    const std::uint64_t p = ctx.p();
    const unsigned n = ctx.n();
    SliceSweep out;
    out.delta = slice.delta();
    ImageEchelon image(slice);
    for (std::size_t s = 0; s < slice.size(); ++s) {
        const IntVector ds = slice.boundary_matrix().column(s);
        IntVector g = image.reduce(ds);
        unsigned k = 0;
        for (;;) {
            const auto y = leading_position(g);
            if (!y) {
                out.sources.push_back({slice.delta(), k, slice.monomial(s)});
                break;
            }
            const auto e = static_cast<unsigned>(vp(g[*y], p).value());
            const unsigned ey = image.quotient_exponent(*y);
            if (e >= ey)
                throw std::logic_error("sweep: reduced image is not reduced");
            const std::uint64_t ws = slice.weight(s).value;
            const std::uint64_t wy = slice.weight(*y).value;
            if (wy >= ws)
                throw std::logic_error("sweep: boundary does not lower the weight");
            out.records.push_back({slice.delta(), k, slice.monomial(s), e, slice.monomial(*y), ws - wy});
            k += ey - e;
            if (k >= n)
                break;
            const BigInt f = ipow(p, ey - e);
            for (BigInt& x : g)
                x *= f;
            g = image.reduce(std::move(g));
        }
        image.insert(ds);
    }
    for (std::size_t y = 0; y < slice.size(); ++y)
        if (unsigned e = image.quotient_exponent(y); e > 0)
            out.targets.push_back({slice.delta(), e, slice.monomial(y)});
    return out;
}

std::vector<DifferentialRecord> SweepResult::records() const
{
    std::vector<DifferentialRecord> all;
    for (const auto& s : slices)
        all.insert(all.end(), s.records.begin(), s.records.end());
    return all;
}

SweepResult differential_sweep(const ModuleContext& ctx, unsigned delta_max)
{
    if (delta_max < 1)
        throw std::invalid_argument("differential_sweep: delta_max must be >= 1");
    SweepResult r;
    r.slices = parallel_map(1, delta_max, [&ctx](unsigned d) { return sweep_slice(DegreeSlice(ctx, d)); });
    return r;
}

std::vector<FamilyShape> conjectured_families(const ModuleContext& ctx)
{
    const auto t = static_cast<std::int64_t>(ctx.t());
    const auto n = static_cast<std::int64_t>(ctx.n());
    std::vector<FamilyShape> fam;
    for (unsigned k = 0; k < ctx.n(); ++k) {
        const auto gk = static_cast<std::int64_t>(ctx.g(k));
        const auto gk1 = static_cast<std::int64_t>(ctx.g(k + 1));
        const std::int64_t h = (t - n + 1) * gk1 - (t - n - 1) * gk;
        const std::int64_t dj = (t - n + 1) * gk1 - (t - n) * gk;
        const std::uint64_t len = static_cast<std::uint64_t>(gk) * ctx.alpha_weight() +
                                  static_cast<std::uint64_t>(dj) * ctx.e_weight();
        fam.push_back({k, k, ctx.n() - k - 1, static_cast<unsigned>(h), static_cast<unsigned>(gk),
                       static_cast<unsigned>(dj), len});
    }
    return fam;
}

int ConjectureReport::exit_code() const
{
    if (!anomalous.empty())
        return 2;
    if (!indeterminate.empty())
        return 3;
    return 0;
}

ConjectureReport conjecture_check(const ModuleContext& ctx, unsigned delta_max)
{
    ConjectureReport rep{ctx.p(), ctx.t(), ctx.n(), delta_max, conjectured_families(ctx), {}, {}, {}};
    rep.family_counts.assign(rep.families.size(), 0);
    // Slices are complete presentations, so no record is cut off by a
    // truncation frontier and none is classified as indeterminate.
    for (const auto& rec : differential_sweep(ctx, delta_max).records()) {
        bool matched = false;
        for (std::size_t f = 0; f < rep.families.size(); ++f) {
            const FamilyShape& s = rep.families[f];
            if (rec.source_p == s.source_p && rec.target_p == s.target_p &&
                rec.v_shift() == s.v_shift && rec.source.i - rec.target.i == s.di &&
                rec.source.j - rec.target.j == s.dj && rec.length == s.length) {
                ++rep.family_counts[f];
                matched = true;
                break;
            }
        }
        if (!matched)
            rep.anomalous.push_back(rec);
    }
    return rep;
}

bool permanent_cycle_check(const ModuleContext& ctx, unsigned i0, unsigned j0)
{
    if (i0 < 1 || j0 < 1)
        throw std::invalid_argument("indices must be >= 1");
    const DegreeSlice slice(ctx, i0 + j0 - 1);
    const auto pos = slice.position(Monomial{0, i0, j0});
    const IntMatrix kernel =
        kernel_basis(slice.boundary_matrix().hconcat(negated(slice.relation_matrix())));
    ImageEchelon cycles(slice);
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        IntVector x(slice.size());
        for (std::size_t r = 0; r < slice.size(); ++r)
            x[r] = kernel(r, c);
        cycles.insert(std::move(x));
    }
    const auto* h = cycles.pivot(*pos);
    return h != nullptr && h->valuation == 0;
}

SliceOrders slice_orders(const DegreeSlice& slice)
{
    const std::uint64_t p = slice.context().p();
    const IntMatrix dual =
        slice.boundary_matrix().transpose().hconcat(slice.relation_matrix().transpose());
    return {slice.degree(), cokernel_orders(slice.image_matrix(), p), cokernel_orders(dual, p)};
}

std::vector<SliceOrders> einfty_orders(const ModuleContext& ctx, unsigned degree_max)
{
    if (degree_max < 2)
        throw std::invalid_argument("einfty_orders: degree bound must be >= 2");
    return parallel_map(1, degree_max / 2,
                        [&ctx](unsigned d) { return slice_orders(DegreeSlice(ctx, d)); });
}

}  // namespace kucalc
