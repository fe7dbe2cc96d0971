#pragma once

// The ku_*-module F (x) ku_*(Z/p^n): the free module on generators
// [i,j] = alpha_i (x) e_j, i, j >= 1, modulo the [p^n]-series relations
// in the second index, together with the boundary d_t built from the
// [p^t]-series acting on the first index.

#include "kucalc/plocal.hpp"
#include "kucalc/series.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kucalc {

/// v^m [i,j].
struct Monomial {
    unsigned m = 0;
    unsigned i = 1;
    unsigned j = 1;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Filtration weight i(p^t+1) + j(p^{t-1}+1).
struct Weight {
    std::uint64_t value = 0;

    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Topological degree 2(m + i + j - 1) of v^m [i,j].
int degree(const Monomial& x);

class ModuleContext {
public:
    /// Throws std::invalid_argument unless p is prime and t >= n >= 1.
    ModuleContext(std::uint64_t p, unsigned t, unsigned n);

    /// A context whose second-index relations use `relations` instead of the
    /// [p^n]-series. Only used to inject faults into verification checks.
    static ModuleContext with_relation_series(std::uint64_t p, unsigned t, unsigned n,
                                              PSeries relations);

    std::uint64_t p() const { return p_; }
    unsigned t() const { return t_; }
    unsigned n() const { return n_; }
    const BigInt& pn() const { return pn_; }

    const PSeries& boundary_series() const { return boundary_; }
    const PSeries& relation_series() const { return relations_; }

    /// g_k = p^k - 1.
    std::uint64_t g(unsigned k) const;

    std::uint64_t alpha_weight() const { return alpha_weight_; }
    std::uint64_t e_weight() const { return e_weight_; }
    Weight weight(unsigned i, unsigned j) const { return {i * alpha_weight_ + j * e_weight_}; }
    Weight weight(const Monomial& x) const { return weight(x.i, x.j); }

    /// Present when t = n = 2.
    const std::optional<UnitTable>& units() const { return units_; }
    const std::optional<QTable>& qtable() const { return qtable_; }

private:
    std::uint64_t p_;
    unsigned t_;
    unsigned n_;
    BigInt pn_;
    PSeries boundary_;
    PSeries relations_;
    std::uint64_t alpha_weight_;
    std::uint64_t e_weight_;
    std::optional<UnitTable> units_;
    std::optional<QTable> qtable_;
};

/// Finite formal sum of c * v^m [i,j]; zero coefficients are never stored.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(const Monomial& x, const PLocalScalar& c = PLocalScalar(1));

    /// Throws std::invalid_argument if x.i or x.j is zero.
    void add(const Monomial& x, const PLocalScalar& c);

    const std::map<Monomial, PLocalScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    PLocalScalar coefficient(const Monomial& x) const;

    /// The common topological degree of all terms; nullopt when empty or mixed.
    std::optional<int> homogeneous_degree() const;

    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    ModuleElement operator-() const;
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(const PLocalScalar& c, const ModuleElement& x);
    /// Multiplication by v^k.
    ModuleElement times_v(unsigned k) const;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

private:
    std::map<Monomial, PLocalScalar> terms_;
};

/// Order in which non-normal sites are rewritten. Both give the same result.
enum class RewriteOrder {
    LargestJFirst,
    SmallestJFirst,
};

/// The unique representative whose coefficients all lie in {0, ..., p^n - 1},
/// obtained with p^n v^m [i,j] -> -sum_{k>=1} C(p^n,k+1) v^{m+k} [i,j-k].
ModuleElement normal_form(const ModuleElement& x, const ModuleContext& ctx,
                          RewriteOrder order = RewriteOrder::LargestJFirst);

bool is_normal(const ModuleElement& x, const ModuleContext& ctx);

/// alpha_i (x) e_j -> sum_k a_k alpha_{i-k} (x) e_j, then normal_form.
ModuleElement boundary(const ModuleElement& x, const ModuleContext& ctx);

/// [a,b] -> [a-di, b-dj], dropping terms with an index <= 0. Not renormalized.
ModuleElement smith_shift(const ModuleElement& x, unsigned di, unsigned dj);

/// Largest weight over the support. Throws std::invalid_argument for zero.
Weight weight(const ModuleElement& x, const ModuleContext& ctx);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses e.g. "4*[3,2] - 6*v*[3,1] + v^4*[1,1]". The result is not normalized.
ModuleElement parse_element(std::string_view text);

/// Renders in the same grammar as parse_element ("0" for zero), terms sorted by
/// descending (i, j, m).
std::string format_element(const ModuleElement& x);
std::string format_term(const Monomial& x, const PLocalScalar& c);

}  // namespace kucalc
