#pragma once

#include "kucalc/kumodule.hpp"
#include "kucalc/series.hpp"
#include "kucalc/spectral.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kucalc {

enum class CheckStatus { Pass, Fail, Indeterminate };

std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    nlohmann::ordered_json params;
    CheckStatus status = CheckStatus::Pass;
    /// Always present on failure.
    std::optional<std::string> witness;
    std::string note;

    static CheckResult pass(std::string name, nlohmann::ordered_json params, std::string note = {});
    static CheckResult fail(std::string name, nlohmann::ordered_json params, std::string witness);
    static CheckResult indeterminate(std::string name, nlohmann::ordered_json params,
                                     std::string note);

    nlohmann::ordered_json to_json() const;
};

/// Suspension shift between a kernel slice of degree 2*delta and the E_1
/// degree it predicts, fitted on small cases and frozen.
inline constexpr int kE1DegreeShift = 1;

/// log_p of the E_0 order predicted in degree 2*delta (proven cases only).
std::uint64_t predicted_e0_log(const ModuleContext& ctx, unsigned delta);
/// log_p of the E_1 order predicted in odd degree `degree`.
std::uint64_t predicted_e1_log(const ModuleContext& ctx, int degree);
bool e01_prediction_available(const ModuleContext& ctx);

CheckResult check_lemma1(const ModuleContext& ctx, unsigned amax);
CheckResult check_lemma2(std::uint64_t p, unsigned kmax, unsigned a,
                         const std::optional<QTable>& q_override = std::nullopt);
CheckResult check_lemma3(std::uint64_t p, unsigned a,
                         const std::optional<QTable>& q_override = std::nullopt);
CheckResult check_proposition(std::uint64_t p, bool part_b = true);
/// Defaults to [(p+2)g1 - 1, g1].
CheckResult check_permanent_cycle(std::uint64_t p, std::optional<Monomial> at = std::nullopt);
CheckResult check_lemma_chop(std::uint64_t p, unsigned kmax);
CheckResult check_e01_orders(std::uint64_t p, unsigned t, unsigned n, unsigned degree_max);
CheckResult check_bp_comparison(std::uint64_t p, unsigned t, unsigned n);
CheckResult check_annihilator(std::uint64_t p, unsigned t, unsigned n);
CheckResult check_differentials(std::uint64_t p, unsigned t, unsigned n, unsigned delta_max);
/// Informational: a_{p^2-1} = v^{g2} carries no factor p, so u_p is undefined.
CheckResult check_unit_up(std::uint64_t p);
/// Observed length of the second family against both printed formulas.
CheckResult check_mu2(std::uint64_t p);

/// Fault-injected variants; each must fail.
CheckResult fault_lemma1(std::uint64_t p, unsigned n);
CheckResult fault_lemma2(std::uint64_t p);
CheckResult fault_lemma3(std::uint64_t p);

/// Wraps a fault-injected result: passes iff `inner` failed.
CheckResult negative_control(const CheckResult& inner);

enum class Profile { Quick, Standard, Extended };
Profile parse_profile(const std::string& name);

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::size_t count(CheckStatus s) const;
    bool ok() const { return count(CheckStatus::Fail) == 0; }
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

VerifyReport run_all(Profile profile, unsigned amax = 10);

}  // namespace kucalc
