#pragma once

#include "kucalc/kumodule.hpp"
#include "kucalc/slice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kucalc {

DegreeSlice build_slice(const ModuleContext& ctx, unsigned delta);

/// Whether the homogeneous element lies in the image of the boundary.
/// Throws std::invalid_argument on zero-free inhomogeneous input.
bool image_membership(const ModuleElement& target, const ModuleContext& ctx);

/// Minimal generators p^a v^b of the annihilator of [1,1].
struct IdealStaircase {
    struct Generator {
        unsigned a;
        unsigned b;
        friend bool operator==(const Generator&, const Generator&) = default;
    };
    std::vector<Generator> gens;
    /// a(b) for b = 0..vmax.
    std::vector<unsigned> profile;
    bool complete = false;
};

IdealStaircase annihilator_staircase(const ModuleContext& ctx, unsigned vmax);
/// 2(g1 + g2).
unsigned default_vmax(const ModuleContext& ctx);

/// p^k v^{m} [i,j] -> p^e v^{m'} [i',j'] on page r.
struct DifferentialRecord {
    unsigned delta;
    unsigned source_p;
    Monomial source;
    unsigned target_p;
    Monomial target;
    std::uint64_t length;

    unsigned v_shift() const { return target.m - source.m; }
    friend bool operator==(const DifferentialRecord&, const DifferentialRecord&) = default;
};

/// "p^k v^m[i,j] -> p^e v^m'[i',j'] (r=..)".
std::string format_record(const DifferentialRecord& rec, std::uint64_t p);

/// A class p^k x that survives to E_infinity on the source side, or a
/// target position whose quotient has order p^e.
struct SurvivorRecord {
    unsigned delta;
    unsigned p_exponent;
    Monomial monomial;
    friend bool operator==(const SurvivorRecord&, const SurvivorRecord&) = default;
};

struct SliceSweep {
    unsigned delta;
    std::vector<DifferentialRecord> records;
    /// p^k x_s in the kernel; contributes p^{n-k} to |ker|.
    std::vector<SurvivorRecord> sources;
    /// Positions with nontrivial quotient p^e; contributes p^e to |coker|.
    std::vector<SurvivorRecord> targets;
};

SliceSweep sweep_slice(const DegreeSlice& slice);

struct SweepResult {
    std::vector<SliceSweep> slices;
    std::vector<DifferentialRecord> records() const;
};

/// Slices 1..delta_max, evaluated concurrently.
SweepResult differential_sweep(const ModuleContext& ctx, unsigned delta_max);

struct FamilyShape {
    unsigned k;
    unsigned source_p;
    unsigned target_p;
    unsigned v_shift;
    unsigned di;
    unsigned dj;
    std::uint64_t length;
};

/// The n conjectured families, k = 0..n-1.
std::vector<FamilyShape> conjectured_families(const ModuleContext& ctx);

struct ConjectureReport {
    std::uint64_t p;
    unsigned t;
    unsigned n;
    unsigned delta_max;
    std::vector<FamilyShape> families;
    std::vector<std::size_t> family_counts;
    std::vector<DifferentialRecord> anomalous;
    std::vector<DifferentialRecord> indeterminate;

    /// 0 on full match, 2 on any anomaly, 3 when only indeterminate records deviate.
    int exit_code() const;
};

ConjectureReport conjecture_check(const ModuleContext& ctx, unsigned delta_max);

/// Whether some kernel element of the boundary in the slice of [i0,j0] has
/// leading monomial [i0,j0] with unit coefficient.
bool permanent_cycle_check(const ModuleContext& ctx, unsigned i0, unsigned j0);

struct SliceOrders {
    int degree;
    CokernelOrders coker;
    CokernelOrders ker;
};

/// Per-slice p-parts of coker and ker of the boundary, degrees 2..degree_max.
std::vector<SliceOrders> einfty_orders(const ModuleContext& ctx, unsigned degree_max);

/// Slice orders for one delta, computed by Smith forms of [D|R] and [D^T|R^T].
SliceOrders slice_orders(const DegreeSlice& slice);

}  // namespace kucalc
