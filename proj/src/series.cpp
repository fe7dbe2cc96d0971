#include "kucalc/series.hpp"

#include <sstream>
#include <stdexcept>

namespace kucalc {

KuPoly::KuPoly(const PLocalScalar& c, unsigned exponent)
{
    add_term(exponent, c);
}

void KuPoly::add_term(unsigned exponent, const PLocalScalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PLocalScalar KuPoly::coefficient(unsigned exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? PLocalScalar() : it->second;
}

unsigned KuPoly::monomial_exponent() const
{
    if (terms_.size() != 1)
        throw std::logic_error("not a monomial: " + to_string());
    return terms_.begin()->first;
}

KuPoly& KuPoly::operator+=(const KuPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

KuPoly& KuPoly::operator-=(const KuPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

KuPoly KuPoly::operator-() const
{
    KuPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

KuPoly operator*(const KuPoly& a, const KuPoly& b)
{
    KuPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

std::string KuPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string s = c.to_string();
        if (!first)
            out << (s[0] == '-' ? " - " : " + ");
        else if (s[0] == '-')
            out << "-";
        if (s[0] == '-')
            s.erase(0, 1);
        first = false;
        if (e == 0) {
            out << s;
            continue;
        }
        if (s != "1")
            out << s << "*";
        out << "v";
        if (e > 1)
            out << "^" << e;
    }
    return out.str();
}

PowerSeries fgl_add(const PowerSeries& f, const PowerSeries& g, unsigned trunc)
{
    if (trunc < 1)
        throw std::invalid_argument("truncation degree must be at least 1");
    PowerSeries r(trunc + 1);
    for (std::size_t d = 0; d < r.size(); ++d) {
        if (d < f.size())
            r[d] += f[d];
        if (d < g.size())
            r[d] += g[d];
    }
    const KuPoly v = KuPoly::v();
    for (std::size_t a = 0; a < f.size() && a <= trunc; ++a) {
        if (f[a].is_zero())
            continue;
        for (std::size_t b = 0; a + b <= trunc && b < g.size(); ++b)
            if (!g[b].is_zero())
                r[a + b] -= v * f[a] * g[b];
    }
    return r;
}

PowerSeries formal_multiple(unsigned m, unsigned trunc)
{
    PowerSeries x(2);
    x[1] = KuPoly(PLocalScalar(1));
    PowerSeries acc(trunc + 1);
    for (unsigned k = 0; k < m; ++k)
        acc = fgl_add(acc, x, trunc);
    return acc;
}

BigInt PSeries::scalar(std::size_t k) const
{
    return coeffs.at(k).coefficient(static_cast<unsigned>(k)).numerator();
}

PSeries pn_series(std::uint64_t p, unsigned m)
{
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime");
    if (m == 0)
        throw std::invalid_argument("p^m must be at least 2");
    BigInt pm = ipow(p, m);
    if (!pm.fits_ulong_p() || pm > 1u << 20)
        throw std::invalid_argument("p^m too large");
    const std::uint64_t len = pm.get_ui();
    PSeries s{p, m, {}};
    s.coeffs.reserve(len);
    for (std::uint64_t k = 0; k < len; ++k)
        s.coeffs.emplace_back(PLocalScalar(binom(len, k + 1)), static_cast<unsigned>(k));
    return s;
}

const PLocalScalar& UnitTable::w_at(unsigned i) const
{
    auto it = w.find(i);
    if (it == w.end())
        throw std::out_of_range("w_" + std::to_string(i) + " is not defined for p=" +
                                std::to_string(p));
    return it->second;
}

const PLocalScalar& UnitTable::u_at(unsigned k) const
{
    auto it = u.find(k);
    if (it == u.end())
        throw std::out_of_range("u_" + std::to_string(k) + " is not defined for p=" +
                                std::to_string(p));
    return it->second;
}

UnitTable extract_units(std::uint64_t p)
{
    const PSeries s = pn_series(p, 2);
    UnitTable t;
    t.p = p;
    const auto last = static_cast<unsigned>(p * p - 2);
    for (unsigned i = 0; i <= last; ++i) {
        if ((i + 1) % p == 0)
            continue;
        PLocalScalar w = unit_divide(PLocalScalar(s.scalar(i)), p, 2);
        if (vp(w, p) != Valuation(0))
            throw std::logic_error("w_" + std::to_string(i) + " is not a unit");
        t.w.emplace(i, w);
    }
    for (unsigned k = 1; k + 1 <= p; ++k) {
        PLocalScalar u = unit_divide(PLocalScalar(s.scalar(k * p - 1)), p, 1);
        if (vp(u, p) != Valuation(0))
            throw std::logic_error("u_" + std::to_string(k) + " is not a unit");
        t.u.emplace(k, u);
    }
    return t;
}

const PLocalScalar& QTable::truncated(unsigned k, unsigned n) const
{
    auto it = qn.find({k, n});
    if (it == qn.end())
        throw std::out_of_range("q_" + std::to_string(k) + "^(" + std::to_string(n) +
                                ") is not defined");
    return it->second;
}

QTable q_polys(const UnitTable& units)
{
    const std::uint64_t p = units.p;
    QTable t;
    t.p = p;
    t.q.push_back(PLocalScalar(-1));
    for (unsigned k = 1; k + 2 <= p; ++k) {
        PLocalScalar acc;
        for (unsigned i = 0; i < k; ++i)
            acc -= units.w_at(k - i) * t.q[i];
        t.q.push_back(acc);
    }
    for (unsigned k = 0; k + 2 <= p; ++k) {
        for (unsigned n = 1; n + 2 <= p; ++n) {
            if (n + 2 <= k) {
                PLocalScalar acc;
                for (unsigned i = 0; i <= n; ++i)
                    acc -= units.w_at(k - i) * t.q[i];
                t.qn.emplace(std::make_pair(k, n), acc);
            } else {
                t.qn.emplace(std::make_pair(k, n), t.q[k]);
            }
        }
    }
    return t;
}

QTable q_polys(std::uint64_t p)
{
    return q_polys(extract_units(p));
}

}  // namespace kucalc
