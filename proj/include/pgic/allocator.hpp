#pragma once

// Optimal power allocation across parallel sub-channels via a common
// subgradient ("price vector") shared by every sub-channel.

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pgic/capacity.hpp"
#include "pgic/model.hpp"
#include "pgic/subdiff.hpp"

namespace pgic {

// Activity threshold used when reporting which users transmit.
inline constexpr double kActivityThreshold = 1e-9;

struct Allocation {
    std::vector<PowerPair> pairs;
    Subgradient certificate;
    std::vector<RegionLabel> labels;
    Rate achieved_rate;
};

// Outcome of solve_general when the budgets could not be certified to lie in
// the noisy-interference power region. No allocation is fabricated.
struct NotInPowerRegion {
    std::string reason;
};

using SolveResult = std::variant<Allocation, NotInPowerRegion>;

// ---------------------------------------------------------------------------
// Symmetric channels (a = b, c = d, equal budgets for both users)
// ---------------------------------------------------------------------------

struct SymmetricProfile {
    std::vector<std::size_t> order;  // channel indices sorted by c descending
    std::vector<double> w;           // per channel, in input order
    double w_hat = 0.0;
    double c_hat = 0.0;
    std::size_t r = 0;  // number of channels active at k = w_hat
    double p_bar = 0.0;
};

// Smallest symmetric price at which the channel stays in its noisy region:
// 4a^2 / (sqrt(c) - sqrt(a))^2.
double symmetric_threshold(const SubChannel& ch);

// Largest equal per-user power of a symmetric channel with noisy
// interference: (sqrt(ac) - 2a) / (2a^2).
double symmetric_noisy_limit(const SubChannel& ch);

// Per-channel power at symmetric price k (k = k_p + k_q): zero once k >= c,
// otherwise the positive root of c / ((1+ap)(1+(a+c)p)) = k.
double symmetric_power(const SubChannel& ch, double k);

// Throws Error{NotSymmetric} unless every channel has a = b > 0 and c = d, and
// Error{StrongInterference} if some a/c >= 1/4.
SymmetricProfile symmetric_profile(std::span<const SubChannel> channels);

// Same quantity as symmetric_profile(...).p_bar but accepts the closed limit
// a/c = 1/4, where the bound evaluates to zero.
double symmetric_power_limit(std::span<const SubChannel> channels);

// Optimal equal-power allocation for total per-user power P in [0, p_bar].
// Throws Error{PowerOutOfRange} if P > p_bar.
Allocation solve_symmetric(std::span<const SubChannel> channels, double total_power);

// ---------------------------------------------------------------------------
// General instances
// ---------------------------------------------------------------------------

// Searches for a price vector k* in the intersection of all B regions whose
// preimages exhaust both budgets. A returned Allocation has been re-validated
// (budgets, certificate membership, region membership); a search result that
// fails validation raises Error{NumericalFailure}.
SolveResult solve_general(const PgicInstance& inst);

// Aggregate power demanded by all channels at price k (extended demand; see
// subdiff.hpp). Exposed for sweeps and tests.
struct AggregateDemand {
    double total_p = 0.0;
    double total_q = 0.0;
    std::vector<Demand> per_channel;
    bool all_in_B = true;
};
AggregateDemand aggregate_demand(std::span<const SubChannel> channels, const Subgradient& k);

// Throws Error{InvalidArgument} unless alloc carries one certificate-valid pair
// per channel and the budgets are met.
void validate_allocation(const PgicInstance& inst, const Allocation& alloc);

struct Activity {
    bool user1 = false;
    bool user2 = false;

    friend bool operator==(const Activity&, const Activity&) = default;
};

std::vector<Activity> activity_table(const PgicInstance& inst, const Allocation& alloc);

// "(+,0)" style rendering of a single row.
std::string to_string(const Activity& activity);

// Ordered boundary of the noisy-interference power region in (P, Q) space,
// starting and ending at the origin. Price rays are cast from a point above
// every O' corner toward the lower left; each ray's exit point from the
// intersection of the B regions maps to one boundary sample.
std::vector<PowerPair> power_region_boundary(std::span<const SubChannel> channels, std::size_t resolution);

}  // namespace pgic
