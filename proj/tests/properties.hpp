#pragma once

// Randomized property runs shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <optional>
#include <string>

namespace kutest {

struct PropertyRun {
    std::string name;
    int cases = 0;
    /// First counterexample, if any.
    std::optional<std::string> failure;

    bool ok() const { return !failure; }
};

PropertyRun prop_valuation(std::uint64_t seed, int cases);
PropertyRun prop_confluence(std::uint64_t seed, int cases);
PropertyRun prop_linearity(std::uint64_t seed, int cases);
PropertyRun prop_smith_first_index(std::uint64_t seed, int cases);
PropertyRun prop_smith_second_index(std::uint64_t seed, int cases);
PropertyRun prop_boundary_grading(std::uint64_t seed, int cases);
PropertyRun prop_snf_reconstruction(std::uint64_t seed, int cases);
PropertyRun prop_snf_unimodular(std::uint64_t seed, int cases);
PropertyRun prop_solve_plocal(std::uint64_t seed, int cases);
PropertyRun prop_staircase(std::uint64_t seed, int cases);

}  // namespace kutest
