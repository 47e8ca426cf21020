#pragma once

#include <span>

#include "pgic/model.hpp"

namespace pgic {

// A sum rate in nats per channel use. Conversion to bits happens only at
// presentation boundaries.
struct Rate {
    double nats = 0.0;

    double bits() const noexcept;

    friend Rate operator+(Rate lhs, Rate rhs) noexcept { return Rate{lhs.nats + rhs.nats}; }
    Rate& operator+=(Rate rhs) noexcept {
        nats += rhs.nats;
        return *this;
    }
};

// Sum rate with both receivers treating interference as noise:
//   1/2 ln(1 + cp/(1+aq)) + 1/2 ln(1 + dq/(1+bp)).
// This is the sub-channel sum-rate capacity when pp lies in the noisy-interference
// region and only an achievable rate elsewhere.
Rate tin_rate(const SubChannel& ch, const PowerPair& pp);

// Sum of tin_rate over all sub-channels. Budgets are not enforced here.
// Throws Error{LengthMismatch} if alloc.size() != inst.size().
Rate total_tin_rate(const PgicInstance& inst, std::span<const PowerPair> alloc);

// Gradient and Hessian of the TIN sum rate (valid wherever the formula is
// differentiable, i.e. for all p, q >= 0).
struct RateGradient {
    double dp = 0.0;
    double dq = 0.0;
};

struct RateHessian {
    double pp = 0.0;
    double pq = 0.0;
    double qq = 0.0;
};

RateGradient tin_gradient(const SubChannel& ch, const PowerPair& pp) noexcept;
RateHessian tin_hessian(const SubChannel& ch, const PowerPair& pp) noexcept;

}  // namespace pgic
