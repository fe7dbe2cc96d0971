#pragma once

// One topological degree 2*delta of the complex: the monomials v^m [i,j]
// with m + i + j = delta + 1, ordered by ascending weight.

#include "kucalc/kumodule.hpp"
#include "kucalc/zlinalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kucalc {

class DegreeSlice {
public:
    /// Throws std::invalid_argument for delta = 0 and std::logic_error if a
    /// construction invariant fails.
    DegreeSlice(const ModuleContext& ctx, unsigned delta);

    const ModuleContext& context() const { return ctx_; }
    unsigned delta() const { return delta_; }
    int degree() const { return 2 * static_cast<int>(delta_); }

    std::size_t size() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const Monomial& monomial(std::size_t pos) const { return basis_[pos]; }
    std::optional<std::size_t> position(const Monomial& x) const;
    Weight weight(std::size_t pos) const { return ctx_.weight(basis_[pos]); }

    /// Column s is the free-coordinate image of basis element s.
    const IntMatrix& boundary_matrix() const { return boundary_; }
    const IntMatrix& relation_matrix() const { return relations_; }
    /// [D | R].
    IntMatrix image_matrix() const { return boundary_.hconcat(relations_); }

    /// Free coordinates; throws std::invalid_argument if a term lies outside
    /// the slice or has a non-integral coefficient.
    IntVector coordinates(const ModuleElement& x) const;
    ModuleElement element(const IntVector& v) const;

    /// Coefficients reduced to {0..p^n-1} using the relations.
    void normalize(IntVector& v) const;
    bool is_zero_in_module(IntVector v) const;

private:
    struct Carry {
        std::size_t target;
        BigInt coefficient;
    };

    ModuleContext ctx_;
    unsigned delta_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
    IntMatrix boundary_;
    IntMatrix relations_;
    std::vector<std::size_t> rewrite_order_;
    std::vector<std::vector<Carry>> carries_;
};

/// A Howell-style echelon basis of a subgroup of the slice module
/// Z^N / (relations). Each stored pivot sits at its leading (highest)
/// position; any element of the subgroup whose leading coefficient has
/// valuation e at position y has a pivot at y of valuation <= e.
class ImageEchelon {
public:
    struct Pivot {
        IntVector vec;
        unsigned valuation;
        BigInt unit;
    };

    explicit ImageEchelon(const DegreeSlice& slice);

    /// Normal form of g reduced against the pivots.
    IntVector reduce(IntVector g) const;
    void insert(IntVector g);
    bool contains(const IntVector& g) const;

    const Pivot* pivot(std::size_t pos) const;
    /// Order exponent of the quotient at each position: the pivot valuation,
    /// or n where there is no pivot.
    unsigned quotient_exponent(std::size_t pos) const;

private:
    const DegreeSlice& slice_;
    std::vector<std::optional<Pivot>> pivots_;
};

/// Position of the highest nonzero entry, or nullopt for the zero vector.
std::optional<std::size_t> leading_position(const IntVector& v);

}  // namespace kucalc
