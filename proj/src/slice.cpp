#include "kucalc/slice.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace kucalc {

DegreeSlice::DegreeSlice(const ModuleContext& ctx, unsigned delta) : ctx_(ctx), delta_(delta)
{
    if (delta == 0)
        throw std::invalid_argument("slice degree must be >= 1");
    for (unsigned i = 1; i <= delta; ++i)
        for (unsigned j = 1; i + j <= delta + 1; ++j)
            basis_.push_back(Monomial{delta + 1 - i - j, i, j});
    std::sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) {
        const Weight wa = ctx_.weight(a), wb = ctx_.weight(b);
        if (wa != wb)
            return wa < wb;
        return a.j > b.j;
    });
    const std::size_t n = basis_.size();
    if (n != static_cast<std::size_t>(delta) * (delta + 1) / 2)
        throw std::logic_error("slice basis has the wrong size");
    for (std::size_t q = 0; q < n; ++q)
        index_.emplace(basis_[q], q);

    const PSeries& bs = ctx_.boundary_series();
    const PSeries& rs = ctx_.relation_series();
    boundary_ = IntMatrix(n, n);
    relations_ = IntMatrix(n, n);
    carries_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        const Monomial& x = basis_[s];
        for (unsigned k = 0; k < bs.length() && k < x.i; ++k) {
            auto it = index_.find(Monomial{x.m + k, x.i - k, x.j});
            if (it == index_.end())
                throw std::logic_error("boundary leaves the slice");
            boundary_(it->second, s) += bs.scalar(k);
        }
        relations_(s, s) = ctx_.pn();
        for (unsigned k = 1; k < rs.length() && k < x.j; ++k) {
            auto it = index_.find(Monomial{x.m + k, x.i, x.j - k});
            if (it == index_.end())
                throw std::logic_error("relation leaves the slice");
            if (it->second >= s)
                throw std::logic_error("relation column is not led by its source");
            relations_(it->second, s) += rs.scalar(k);
            carries_[s].push_back({it->second, rs.scalar(k)});
        }
    }

    rewrite_order_.resize(n);
    for (std::size_t q = 0; q < n; ++q)
        rewrite_order_[q] = q;
    std::sort(rewrite_order_.begin(), rewrite_order_.end(), [&](std::size_t a, std::size_t b) {
        const Monomial& x = basis_[a];
        const Monomial& y = basis_[b];
        return std::tie(x.j, x.m, x.i) > std::tie(y.j, y.m, y.i);
    });
}

std::optional<std::size_t> DegreeSlice::position(const Monomial& x) const
{
    auto it = index_.find(x);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

IntVector DegreeSlice::coordinates(const ModuleElement& x) const
{
    IntVector v(size());
    for (const auto& [mono, c] : x.terms()) {
        auto pos = position(mono);
        if (!pos)
            throw std::invalid_argument("term " + format_term(mono, c) + " is not in degree " +
                                        std::to_string(degree()));
        if (c.is_integer()) {
            v[*pos] += c.numerator();
        } else {
            // A p-local coefficient is an integer modulo p^n.
            v[*pos] += c.residue(ctx_.pn());
        }
    }
    return v;
}

ModuleElement DegreeSlice::element(const IntVector& v) const
{
    ModuleElement x;
    for (std::size_t q = 0; q < v.size() && q < size(); ++q)
        if (sgn(v[q]) != 0)
            x.add(basis_[q], PLocalScalar(v[q]));
    return x;
}

void DegreeSlice::normalize(IntVector& v) const
{
    const BigInt& pn = ctx_.pn();
    BigInt q;
    for (std::size_t s : rewrite_order_) {
        BigInt& c = v[s];
        if (sgn(c) == 0)
            continue;
        mpz_fdiv_qr(q.get_mpz_t(), c.get_mpz_t(), c.get_mpz_t(), pn.get_mpz_t());
        if (sgn(q) == 0)
            continue;
        for (const Carry& k : carries_[s])
            mpz_submul(v[k.target].get_mpz_t(), q.get_mpz_t(), k.coefficient.get_mpz_t());
    }
}

bool DegreeSlice::is_zero_in_module(IntVector v) const
{
    normalize(v);
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

std::optional<std::size_t> leading_position(const IntVector& v)
{
    for (std::size_t q = v.size(); q-- > 0;)
        if (sgn(v[q]) != 0)
            return q;
    return std::nullopt;
}

ImageEchelon::ImageEchelon(const DegreeSlice& slice) : slice_(slice), pivots_(slice.size()) {}

IntVector ImageEchelon::reduce(IntVector g) const
{
    const std::uint64_t p = slice_.context().p();
    const BigInt& pn = slice_.context().pn();
    slice_.normalize(g);
    for (;;) {
        auto y = leading_position(g);
        if (!y || !pivots_[*y])
            return g;
        const Pivot& h = *pivots_[*y];
        const BigInt& c = g[*y];
        const std::uint64_t e = vp(c, p).value();
        if (h.valuation > e)
            return g;
        BigInt lambda = c / ipow(p, h.valuation);
        lambda *= inverse_mod(h.unit, pn);
        mpz_fdiv_r(lambda.get_mpz_t(), lambda.get_mpz_t(), pn.get_mpz_t());
        for (std::size_t q = 0; q <= *y; ++q)
            if (sgn(h.vec[q]) != 0)
                mpz_submul(g[q].get_mpz_t(), lambda.get_mpz_t(), h.vec[q].get_mpz_t());
        slice_.normalize(g);
    }
}

void ImageEchelon::insert(IntVector g)
{
    const std::uint64_t p = slice_.context().p();
    const unsigned n = slice_.context().n();
    std::vector<IntVector> pending{std::move(g)};
    while (!pending.empty()) {
        IntVector cur = reduce(std::move(pending.back()));
        pending.pop_back();
        auto y = leading_position(cur);
        if (!y)
            continue;
        const auto e = static_cast<unsigned>(vp(cur[*y], p).value());
        BigInt unit = cur[*y] / ipow(p, e);
        IntVector multiple = cur;
        const BigInt f = ipow(p, n - e);
        for (BigInt& x : multiple)
            x *= f;
        if (pivots_[*y])
            pending.push_back(std::move(pivots_[*y]->vec));
        pivots_[*y] = Pivot{std::move(cur), e, std::move(unit)};
        pending.push_back(std::move(multiple));
    }
}

bool ImageEchelon::contains(const IntVector& g) const
{
    return !leading_position(reduce(g)).has_value();
}

const ImageEchelon::Pivot* ImageEchelon::pivot(std::size_t pos) const
{
    return pivots_.at(pos) ? &*pivots_[pos] : nullptr;
}

unsigned ImageEchelon::quotient_exponent(std::size_t pos) const
{
    const Pivot* h = pivot(pos);
    return h ? h->valuation : slice_.context().n();
}

}  // namespace kucalc
