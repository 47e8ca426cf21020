#pragma once

// Channel parameterization for parallel two-user Gaussian interference
// channels with unit-variance noise at both receivers.
//
//   y1 = sqrt(c) x1 + sqrt(a) x2 + z1
//   y2 = sqrt(d) x2 + sqrt(b) x1 + z2
//
// All gains are squared amplitudes (power gains).

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace pgic {

// Absolute slack applied to the noisy-interference inequality so that points
// produced by round-trip computations on the boundary are still accepted.
inline constexpr double kRegionSlack = 1e-12;

class SubChannel {
public:
    // Throws Error{InvalidChannel} unless a,b >= 0, c,d > 0, a < d and b < c.
    SubChannel(double a, double b, double c, double d);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }

    // The same channel with the two users swapped.
    SubChannel mirrored() const { return SubChannel(b_, a_, d_, c_); }

    bool symmetric() const noexcept { return a_ == b_ && c_ == d_; }

    friend bool operator==(const SubChannel&, const SubChannel&) = default;

private:
    double a_;
    double b_;
    double c_;
    double d_;
};

enum class ChannelClass {
    TwoSided,          // a > 0, b > 0
    OneSidedIntoRx1,   // a > 0, b = 0
    OneSidedIntoRx2,   // a = 0, b > 0
    InterferenceFree,  // a = 0, b = 0
};

std::string_view to_string(ChannelClass cls);

struct PowerPair {
    double p = 0.0;
    double q = 0.0;

    friend bool operator==(const PowerPair&, const PowerPair&) = default;
};

class PgicInstance {
public:
    // Throws Error{InvalidInstance} for an empty channel list or negative budgets.
    PgicInstance(std::vector<SubChannel> channels, double total_p, double total_q);

    std::span<const SubChannel> channels() const noexcept { return channels_; }
    std::size_t size() const noexcept { return channels_.size(); }
    const SubChannel& channel(std::size_t i) const { return channels_.at(i); }
    double total_p() const noexcept { return total_p_; }
    double total_q() const noexcept { return total_q_; }

    PgicInstance with_budgets(double total_p, double total_q) const {
        return PgicInstance(channels_, total_p, total_q);
    }

private:
    std::vector<SubChannel> channels_;
    double total_p_;
    double total_q_;
};

ChannelClass classify(const SubChannel& ch) noexcept;

// sqrt(ac) + sqrt(bd) < sqrt(cd), strict.
bool coefficient_condition(const SubChannel& ch) noexcept;

// sqrt(cd) - sqrt(ac)(1 + bp) - sqrt(bd)(1 + aq); non-negative inside the
// noisy-interference region.
double noisy_region_margin(const SubChannel& ch, const PowerPair& pp) noexcept;

// Membership in the noisy-interference power region (non-strict, with
// kRegionSlack absolute slack).
bool in_noisy_region(const SubChannel& ch, const PowerPair& pp) noexcept;

// Finite corners S = (0, q_s) and T = (p_t, 0) of the triangular region of a
// two-sided channel.
struct Corners {
    PowerPair s;
    PowerPair t;
};

// Throws Error{ClassError} for channels with a zero cross gain and
// Error{DegenerateRegion} when the coefficient condition fails.
Corners corner_points(const SubChannel& ch);

}  // namespace pgic
