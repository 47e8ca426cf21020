#pragma once

// Genie-aided upper bound: side-information noise parameters for each
// sub-channel, the resulting per-channel bound functions, and checks that the
// bound touches the TIN rate at the optimum.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pgic/allocator.hpp"
#include "pgic/capacity.hpp"
#include "pgic/model.hpp"

namespace pgic {

// Sign taken in front of the square root for sigma1^2 and sigma2^2.
struct RootChoice {
    int sign1 = +1;
    int sign2 = +1;

    friend bool operator==(const RootChoice&, const RootChoice&) = default;
};

struct GenieParams {
    std::optional<double> sigma1_sq;
    std::optional<double> sigma2_sq;
    std::optional<double> rho1;
    std::optional<double> rho2;
    ChannelClass cls = ChannelClass::InterferenceFree;
    RootChoice root_choice;
};

// Every (+-, +-) combination for a two-sided channel that gives real,
// non-negative variances, correlations in [0, 1] and satisfies
// sqrt(c) rho1 sigma1 = 1 + aQ*, sqrt(d) rho2 sigma2 = 1 + bP*.
// Empty for other classes or infeasible optima.
std::vector<GenieParams> genie_branches(const SubChannel& ch, const PowerPair& opt);

// Branch with the smaller sigma1^2 for two-sided channels, closed forms for
// one-sided channels, empty parameters when interference-free.
// Throws Error{Infeasible} when no two-sided branch is valid.
GenieParams genie_params(const SubChannel& ch, const PowerPair& opt);

// Closed form for a link with one interferer of gain `cross` into a receiver
// with direct gain `direct`, where the interfering user has direct gain
// `interferer_direct` and optimal power `interferer_power`:
// rho = sqrt(1 - cross / interferer_direct), sigma^2 = (1 + cross P)^2 / (direct rho^2).
// With cross = 0 this gives rho = 1, sigma^2 = 1 / direct.
struct OneSidedGenie {
    double sigma_sq;
    double rho;
};
OneSidedGenie one_sided_genie(double cross, double direct, double interferer_direct, double interferer_power);

// Bound function of the channel evaluated at pp with the genie frozen at gp.
// Throws Error{DomainError} when a denominator 1 + aq - rho1^2 (or its
// mirror) is not positive, Error{InvalidArgument} for negative powers.
Rate f_value(const SubChannel& ch, const GenieParams& gp, const PowerPair& pp);

struct TangencyReport {
    double value_gap = 0.0;
    double grad_gap = 0.0;
};

// Compares f and the TIN rate at opt: values, and finite-difference gradients
// (central with step 1e-6, one-sided inward on a zero coordinate).
TangencyReport tangency_check(const SubChannel& ch, const GenieParams& gp, const PowerPair& opt);

struct AuditReport {
    std::size_t samples = 0;
    double worst_bound_margin = 0.0;      // min over samples of sum f(opt) - sum f(sample)
    double worst_concavity_margin = 0.0;  // min of f(mix) - mix of f
    double worst_monotone_margin = 0.0;   // min of f(x + e) - f(x)
};

// Monte-Carlo check that the optimum maximizes sum f over the budgets and that
// each f is concave and non-decreasing. Throws Error{AuditFailure} on a
// violation beyond 1e-8 (bound) or 1e-9 (shape).
AuditReport bound_audit(const PgicInstance& inst, const Allocation& opt, std::size_t samples, std::uint64_t seed);

}  // namespace pgic
