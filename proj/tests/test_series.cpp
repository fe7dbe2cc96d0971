#include "kucalc/series.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace kucalc;

namespace {

PowerSeries x_series(unsigned trunc)
{
    PowerSeries x(trunc + 1);
    x[1] = KuPoly(PLocalScalar(1));
    return x;
}

// (1 - (1 - v x)^m) / v expanded by the binomial theorem.
PowerSeries multiple_oracle(unsigned m, unsigned trunc)
{
    PowerSeries out(trunc + 1);
    for (unsigned k = 0; k < m && k + 1 <= trunc; ++k) {
        BigInt c = binom(m, k + 1);
        if (k % 2 == 1)
            c = -c;
        out[k + 1] = KuPoly(PLocalScalar(c), k);
    }
    return out;
}

std::size_t trimmed(const PowerSeries& s)
{
    std::size_t n = s.size();
    while (n > 0 && s[n - 1].is_zero())
        --n;
    return n;
}

bool same_series(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t n = std::max(trimmed(a), trimmed(b));
    for (std::size_t k = 0; k < n; ++k) {
        const KuPoly ak = k < a.size() ? a[k] : KuPoly();
        const KuPoly bk = k < b.size() ? b[k] : KuPoly();
        if (!(ak == bk))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("KuPoly arithmetic")
{
    const KuPoly a = KuPoly(PLocalScalar(2)) + KuPoly::v(3);
    const KuPoly b = KuPoly(PLocalScalar(-1), 1);
    CHECK((a * b).coefficient(1) == PLocalScalar(-2));
    CHECK((a * b).coefficient(4) == PLocalScalar(-1));
    CHECK((a - a).is_zero());
    CHECK(KuPoly::v(5).monomial_exponent() == 5);
    CHECK_THROWS_AS(a.monomial_exponent(), std::logic_error);
    CHECK(KuPoly(PLocalScalar(0), 3).is_zero());
    CHECK(KuPoly(PLocalScalar(6), 1).to_string() == "6*v");
}

TEST_CASE("fgl_add")
{
    const PowerSeries x = x_series(4);
    CHECK(same_series(fgl_add(x, PowerSeries(5), 4), x));

    PowerSeries twice(5);
    twice[1] = KuPoly(PLocalScalar(2));
    twice[2] = KuPoly(PLocalScalar(-1), 1);
    CHECK(same_series(fgl_add(x, x, 4), twice));

    // truncation drops x^2 and above
    CHECK(same_series(fgl_add(x, x, 1), multiple_oracle(2, 1)));
}

TEST_CASE("formal multiples match the binomial expansion")
{
    CHECK(same_series(formal_multiple(4, 6), multiple_oracle(4, 6)));
    for (unsigned m = 1; m <= 9; ++m)
        CHECK(same_series(formal_multiple(m, m + 2), multiple_oracle(m, m + 2)));
}

TEST_CASE("pn_series coefficients")
{
    const PSeries s = pn_series(2, 2);
    REQUIRE(s.length() == 4);
    CHECK(s.scalar(0) == 4);
    CHECK(s.scalar(1) == 6);
    CHECK(s.scalar(2) == 4);
    CHECK(s.scalar(3) == 1);
    CHECK(s.coeffs[3] == KuPoly::v(3));

    const PSeries t = pn_series(3, 1);
    REQUIRE(t.length() == 3);
    CHECK(t.scalar(0) == 3);
    CHECK(t.scalar(1) == 3);
    CHECK(t.scalar(2) == 1);

    CHECK(pn_series(3, 2).coeffs[2] == KuPoly(PLocalScalar(84), 2));

    CHECK_THROWS_AS(pn_series(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(pn_series(2, 0), std::invalid_argument);
}

TEST_CASE("pn_series valuation identity")
{
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned m = 1; m <= 2; ++m) {
            const PSeries s = pn_series(p, m);
            CHECK(s.scalar(0) == ipow(p, m));
            CHECK(s.coeffs.back() == KuPoly::v(static_cast<unsigned>(s.length() - 1)));
            for (std::size_t k = 0; k < s.length(); ++k) {
                CHECK(s.coeffs[k].monomial_exponent() == k);
                const std::uint64_t e = vp(BigInt(k + 1), p).value();
                CHECK(vp(s.scalar(k), p) == Valuation(m - e));
            }
        }
}

TEST_CASE("FGL multiple agrees with pn_series up to (-1)^k")
{
    for (std::uint64_t p : {2u, 3u, 5u})
        for (unsigned m = 1; ipow(p, m) <= 25; ++m) {
            const PSeries s = pn_series(p, m);
            const auto pm = static_cast<unsigned>(s.length());
            const PowerSeries f = formal_multiple(pm, pm);
            for (unsigned k = 0; k < pm; ++k) {
                const PLocalScalar c = f[k + 1].coefficient(k);
                const PLocalScalar expect(k % 2 == 0 ? s.scalar(k) : BigInt(-s.scalar(k)));
                CHECK(c == expect);
            }
        }
}

TEST_CASE("unit tables")
{
    const UnitTable u2 = extract_units(2);
    CHECK(u2.w_at(0) == PLocalScalar(1));
    CHECK(u2.w_at(2) == PLocalScalar(1));
    CHECK(u2.u_at(1) == PLocalScalar(3));
    CHECK_THROWS(u2.w_at(1));
    CHECK_THROWS(u2.u_at(2));

    const UnitTable u3 = extract_units(3);
    CHECK(u3.w_at(1) == PLocalScalar(4));
    CHECK(u3.u_at(2) == PLocalScalar(28));

    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        const UnitTable u = extract_units(p);
        CHECK(u.w_at(0) == PLocalScalar(1));
        CHECK(u.u.size() == p - 1);
        for (const auto& [i, w] : u.w) {
            CHECK((i + 1) % p != 0);
            CHECK(vp(w, p) == Valuation(0));
        }
        for (const auto& [k, x] : u.u)
            CHECK(vp(x, p) == Valuation(0));
    }
}

TEST_CASE("q polynomials")
{
    const QTable q2 = q_polys(2);
    REQUIRE(q2.q.size() == 1);
    CHECK(q2.q[0] == PLocalScalar(-1));

    const QTable q3 = q_polys(3);
    REQUIRE(q3.q.size() == 2);
    CHECK(q3.q[1] == PLocalScalar(4));

    CHECK(q_polys(5).q.at(2) == PLocalScalar(-52));

    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
        const UnitTable u = extract_units(p);
        const QTable q = q_polys(u);
        CHECK(q.q.size() == p - 1);
        CHECK(q.q[0] == PLocalScalar(-1));
        CHECK(q.q[1] == u.w_at(1));
        for (unsigned k = 1; k < q.q.size(); ++k) {
            PLocalScalar acc;
            for (unsigned i = 0; i < k; ++i)
                acc -= u.w_at(k - i) * q.q[i];
            CHECK(q.q[k] == acc);
        }
        for (unsigned k = 0; k < q.q.size(); ++k)
            for (unsigned n = 1; n + 2 <= p; ++n)
                if (n + 1 >= k)
                    CHECK(q.truncated(k, n) == q.q[k]);
    }
    CHECK_THROWS_AS(q_polys(5).truncated(1, 9), std::out_of_range);
}
