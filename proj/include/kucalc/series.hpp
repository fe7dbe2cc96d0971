#pragma once

// The multiplicative formal group law x + y - vxy over ku_* = Z_(p)[v], its
// [m]-series, and the unit tables extracted from the [p^2]-series.

#include "kucalc/plocal.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kucalc {

/// Sparse polynomial in v over Z_(p). The monomial c*v^m sits in degree 2m.
class KuPoly {
public:
    KuPoly() = default;
    KuPoly(const PLocalScalar& c, unsigned exponent = 0);

    static KuPoly v(unsigned exponent = 1) { return KuPoly(PLocalScalar(1), exponent); }

    const std::map<unsigned, PLocalScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    PLocalScalar coefficient(unsigned exponent) const;

    /// Exponent of a single-term polynomial; throws std::logic_error otherwise.
    unsigned monomial_exponent() const;

    KuPoly& operator+=(const KuPoly& o);
    KuPoly& operator-=(const KuPoly& o);
    KuPoly operator-() const;
    friend KuPoly operator+(KuPoly a, const KuPoly& b) { return a += b; }
    friend KuPoly operator-(KuPoly a, const KuPoly& b) { return a -= b; }
    friend KuPoly operator*(const KuPoly& a, const KuPoly& b);
    friend bool operator==(const KuPoly&, const KuPoly&) = default;

    std::string to_string() const;

private:
    void add_term(unsigned exponent, const PLocalScalar& c);

    std::map<unsigned, PLocalScalar> terms_;
};

/// Truncated power series in x with KuPoly coefficients; index = x-degree.
using PowerSeries = std::vector<KuPoly>;

/// F(f, g) = f + g - v*f*g, truncated past x-degree `trunc`.
PowerSeries fgl_add(const PowerSeries& f, const PowerSeries& g, unsigned trunc);

/// The m-fold formal sum x +_F ... +_F x, truncated past x-degree `trunc`.
PowerSeries formal_multiple(unsigned m, unsigned trunc);

/// Coefficients a_0..a_{p^m-1} of the [p^m]-series, with a_k = C(p^m, k+1) v^k.
///
/// This is the unsigned convention: the FGL-derived multiple carries an extra
/// (-1)^k on a_k, which only flips the sign of the basis element e_j with j even.
struct PSeries {
    std::uint64_t p = 0;
    unsigned exponent = 0;
    std::vector<KuPoly> coeffs;

    std::uint64_t length() const { return coeffs.size(); }
    /// The integer C(p^m, k+1) in front of v^k.
    BigInt scalar(std::size_t k) const;
};

/// Throws std::invalid_argument unless p is prime and p^m >= 2.
PSeries pn_series(std::uint64_t p, unsigned m);

/// p-units w_i and u_k with a_i = w_i p^2 v^i (p does not divide i+1) and
/// a_{kp-1} = u_k p v^{kp-1} (1 <= k <= p-1) in the [p^2]-series.
///
/// k = p is excluded: a_{p^2-1} = v^{p^2-1} carries no factor p.
struct UnitTable {
    std::uint64_t p = 0;
    std::map<unsigned, PLocalScalar> w;
    std::map<unsigned, PLocalScalar> u;

    const PLocalScalar& w_at(unsigned i) const;
    const PLocalScalar& u_at(unsigned k) const;
};

UnitTable extract_units(std::uint64_t p);

/// q_0 = -1, q_k = -sum_{i<k} w_{k-i} q_i for k <= p-2, and the truncated
/// variants q_k^{(n)} for 1 <= n <= p-2.
struct QTable {
    std::uint64_t p = 0;
    std::vector<PLocalScalar> q;
    std::map<std::pair<unsigned, unsigned>, PLocalScalar> qn;

    const PLocalScalar& truncated(unsigned k, unsigned n) const;
};

QTable q_polys(std::uint64_t p);
QTable q_polys(const UnitTable& units);

}  // namespace kucalc
