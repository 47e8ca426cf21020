#include "pgic/capacity.hpp"

#include <cmath>
#include <numbers>

#include "pgic/error.hpp"

namespace pgic {

double Rate::bits() const noexcept { return nats / std::numbers::ln2; }

Rate tin_rate(const SubChannel& ch, const PowerPair& pp) {
    if (!(pp.p >= 0.0) || !(pp.q >= 0.0)) {
        throw Error(Errc::InvalidArgument, "powers must be non-negative");
    }
    const double r1 = 0.5 * std::log1p(ch.c() * pp.p / (1.0 + ch.a() * pp.q));
    const double r2 = 0.5 * std::log1p(ch.d() * pp.q / (1.0 + ch.b() * pp.p));
    return Rate{r1 + r2};
}

Rate total_tin_rate(const PgicInstance& inst, std::span<const PowerPair> alloc) {
    if (alloc.size() != inst.size()) {
        throw Error(Errc::LengthMismatch, "allocation has " + std::to_string(alloc.size()) +
                                              " entries for " + std::to_string(inst.size()) + " channels");
    }
    Rate total;
    for (std::size_t i = 0; i < alloc.size(); ++i) total += tin_rate(inst.channel(i), alloc[i]);
    return total;
}

RateGradient tin_gradient(const SubChannel& ch, const PowerPair& x) noexcept {
    const double a = ch.a(), b = ch.b(), c = ch.c(), d = ch.d();
    const double u = 1.0 + c * x.p + a * x.q;
    const double v = 1.0 + b * x.p + d * x.q;
    const double s = 1.0 + a * x.q;
    const double t = 1.0 + b * x.p;
    return RateGradient{0.5 * (c / u + b / v - b / t), 0.5 * (a / u + d / v - a / s)};
}

RateHessian tin_hessian(const SubChannel& ch, const PowerPair& x) noexcept {
    const double a = ch.a(), b = ch.b(), c = ch.c(), d = ch.d();
    const double u = 1.0 + c * x.p + a * x.q;
    const double v = 1.0 + b * x.p + d * x.q;
    const double s = 1.0 + a * x.q;
    const double t = 1.0 + b * x.p;
    const double u2 = u * u, v2 = v * v;
    return RateHessian{0.5 * (-c * c / u2 - b * b / v2 + b * b / (t * t)),
                       0.5 * (-c * a / u2 - b * d / v2),
                       0.5 * (-a * a / u2 - d * d / v2 + a * a / (s * s))};
}

}  // namespace pgic
